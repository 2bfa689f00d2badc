#include "aperylab/census.hpp"

#include <algorithm>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <thread>

#include "aperylab/factorization.hpp"

namespace aperylab {

// --- EnumerationNode --------------------------------------------------------

EnumerationNode EnumerationNode::root() {
    EnumerationNode node;
    for (int n = 0; n < kSlots; ++n) {
        node.pairs_[static_cast<std::size_t>(n)] = static_cast<std::uint8_t>(n / 2 + 1);
    }
    return node;
}

std::vector<Int> EnumerationNode::atoms() const {
    std::vector<Int> out;
    for (int n = 1; n <= frobenius_ + multiplicity_ + 1; ++n) {
        if (pairs_[static_cast<std::size_t>(n)] == 1) out.push_back(n);
    }
    return out;
}

std::vector<int> EnumerationNode::effective_generators() const {
    std::vector<int> out;
    for (int n = std::max(frobenius_ + 1, 1); n <= frobenius_ + multiplicity_ + 1; ++n) {
        if (pairs_[static_cast<std::size_t>(n)] == 1) out.push_back(n);
    }
    return out;
}

EnumerationNode EnumerationNode::child(int generator) const {
    EnumerationNode c = *this;
    // Descending, so pairs_[n - generator] is still the parent's value.
    for (int n = kSlots - 1; n >= generator; --n) {
        if (c.pairs_[static_cast<std::size_t>(n - generator)] > 0) {
            --c.pairs_[static_cast<std::size_t>(n)];
        }
    }
    c.frobenius_ = generator;
    c.genus_ = genus_ + 1;
    if (generator == multiplicity_) c.multiplicity_ = generator + 1;
    if (c.frobenius_ > 2 * c.genus_ - 1) {
        throw std::logic_error("Frobenius bound violated in genus tree");
    }
    return c;
}

std::vector<Int> EnumerationNode::gaps() const {
    std::vector<Int> out;
    for (int n = 1; n <= frobenius_; ++n) {
        if (!contains(n)) out.push_back(n);
    }
    return out;
}

std::vector<Int> EnumerationNode::apery_by_residue() const {
    const int m = multiplicity_;
    std::vector<Int> apery(static_cast<std::size_t>(m), -1);
    int found = 0;
    for (int n = 0; found < m; ++n) {
        auto& slot = apery[static_cast<std::size_t>(n % m)];
        if (slot < 0 && contains(n)) {
            slot = n;
            ++found;
        }
    }
    return apery;
}

bool EnumerationNode::is_ahf() const {
    const auto apery = apery_by_residue();
    const auto gens = atoms();
    return is_ahf_from_apery(apery, std::span<const Int>(gens).subspan(1));
}

NumericalSemigroup EnumerationNode::to_semigroup() const { return NumericalSemigroup::from_generators(atoms()); }

// --- Traversal --------------------------------------------------------------

namespace {

using NodeVisitor = std::function<void(const EnumerationNode&)>;

bool cancelled(const std::atomic<bool>* flag) { return flag && flag->load(std::memory_order_relaxed); }

bool walk(const EnumerationNode& node, int max_genus, const NodeVisitor& visit, const std::atomic<bool>* cancel) {
    if (cancelled(cancel)) return false;
    visit(node);
    if (node.genus() == max_genus) return true;
    for (int g : node.effective_generators()) {
        if (!walk(node.child(g), max_genus, visit, cancel)) return false;
    }
    return true;
}

void collect_frontier(const EnumerationNode& node, int split, const NodeVisitor& visit,
                      std::vector<EnumerationNode>& frontier) {
    if (node.genus() == split) {
        frontier.push_back(node);
        return;
    }
    visit(node);
    for (int g : node.effective_generators()) collect_frontier(node.child(g), split, visit, frontier);
}

void check_genus(int max_genus) {
    if (max_genus < 0 || max_genus > kMaxCensusGenus) {
        throw std::invalid_argument("max genus must lie in [0, " + std::to_string(kMaxCensusGenus) + "], got " +
                                    std::to_string(max_genus));
    }
}

// Runs `make_visitor(worker)` per worker over disjoint subtrees.
template <class MakeVisitor>
bool run_split(int max_genus, const EnumerationOptions& options, const NodeVisitor& shallow,
               MakeVisitor&& make_visitor) {
    check_genus(max_genus);
    const unsigned threads = std::max(1u, options.threads);
    const int split = std::clamp(options.split_genus, 0, max_genus);

    std::vector<EnumerationNode> frontier;
    collect_frontier(EnumerationNode::root(), split, shallow, frontier);

    std::atomic<std::size_t> next{0};
    std::atomic<bool> ok{true};
    auto worker = [&](unsigned id) {
        const NodeVisitor visit = make_visitor(id);
        for (std::size_t i = next++; i < frontier.size(); i = next++) {
            if (!walk(frontier[i], max_genus, visit, options.cancel)) {
                ok = false;
                return;
            }
        }
    };
    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned id = 0; id < threads; ++id) pool.emplace_back(worker, id);
    }
    return ok;
}

}  // namespace

bool enumerate_nodes(int max_genus, const NodeVisitor& visitor, const EnumerationOptions& options) {
    return run_split(max_genus, options, visitor, [&](unsigned) { return visitor; });
}

bool enumerate_by_genus(int max_genus, const std::function<void(const NumericalSemigroup&)>& visitor,
                        const EnumerationOptions& options) {
    return enumerate_nodes(
        max_genus, [&](const EnumerationNode& node) { visitor(node.to_semigroup()); }, options);
}

// --- CensusTable ------------------------------------------------------------

CensusTable::CensusTable(int max_genus) : max_genus_(max_genus) {
    check_genus(max_genus);
    cells_.resize(static_cast<std::size_t>(max_genus) + 1);
    for (int g = 0; g <= max_genus; ++g) cells_[static_cast<std::size_t>(g)].resize(static_cast<std::size_t>(g) + 2);
    complete_through = max_genus;
}

const CensusCell& CensusTable::cell(int genus, int multiplicity) const {
    return cells_.at(static_cast<std::size_t>(genus)).at(static_cast<std::size_t>(multiplicity));
}

CensusCell& CensusTable::cell(int genus, int multiplicity) {
    return cells_.at(static_cast<std::size_t>(genus)).at(static_cast<std::size_t>(multiplicity));
}

std::uint64_t CensusTable::total(int genus) const {
    std::uint64_t sum = 0;
    for (const auto& c : cells_.at(static_cast<std::size_t>(genus))) sum += c.count;
    return sum;
}

std::uint64_t CensusTable::ahf_total(int genus) const {
    std::uint64_t sum = 0;
    for (const auto& c : cells_.at(static_cast<std::size_t>(genus))) sum += c.ahf;
    return sum;
}

std::uint64_t CensusTable::cumulative_total() const {
    std::uint64_t sum = 0;
    for (int g = 0; g <= max_genus_; ++g) sum += total(g);
    return sum;
}

std::uint64_t CensusTable::cumulative_ahf() const {
    std::uint64_t sum = 0;
    for (int g = 0; g <= max_genus_; ++g) sum += ahf_total(g);
    return sum;
}

void CensusTable::merge(const CensusTable& other) {
    if (other.max_genus_ != max_genus_) throw std::invalid_argument("census tables of different sizes");
    for (std::size_t g = 0; g < cells_.size(); ++g) {
        for (std::size_t m = 0; m < cells_[g].size(); ++m) {
            cells_[g][m].count += other.cells_[g][m].count;
            cells_[g][m].ahf += other.cells_[g][m].ahf;
        }
    }
}

CensusTable census(int max_genus, const EnumerationOptions& options) {
    CensusTable table(max_genus);
    auto record = [](CensusTable& t, const EnumerationNode& node) {
        auto& c = t.cell(node.genus(), node.multiplicity());
        ++c.count;
        if (node.is_ahf()) ++c.ahf;
    };

    const unsigned threads = std::max(1u, options.threads);
    std::vector<CensusTable> partial(threads, CensusTable(max_genus));
    const bool finished = run_split(
        max_genus, options, [&](const EnumerationNode& node) { record(table, node); },
        [&](unsigned id) { return [&, id](const EnumerationNode& node) { record(partial[id], node); }; });
    for (const auto& p : partial) table.merge(p);
    if (!finished) {
        table.complete = false;
        table.complete_through = std::clamp(options.split_genus, 0, max_genus) - 1;
    }
    return table;
}

// --- Reports ----------------------------------------------------------------

namespace {

std::string ratio_cell(std::uint64_t h, std::uint64_t n) {
    if (n == 0) return "-";
    const Rational r(static_cast<Int>(h), static_cast<Int>(n));
    return r.str() + " (" + r.decimal(4) + ")";
}

}  // namespace

std::string ratio_report(const CensusTable& table, int multiplicity_filter) {
    std::ostringstream os;
    os << "genus  n_g  h_g  h_g/n_g\n";
    for (int g = 0; g <= table.max_genus(); ++g) {
        os << g << "  " << table.total(g) << "  " << table.ahf_total(g) << "  "
           << ratio_cell(table.ahf_total(g), table.total(g)) << "\n";
    }
    os << "cumulative  " << table.cumulative_total() << "  " << table.cumulative_ahf() << "  "
       << ratio_cell(table.cumulative_ahf(), table.cumulative_total()) << "\n";
    os << "\nmultiplicity  genus  n_{m,g}  h_{m,g}  h/n\n";
    for (int m = 1; m <= table.max_genus() + 1; ++m) {
        if (multiplicity_filter && m != multiplicity_filter) continue;
        for (int g = std::max(m - 1, 0); g <= table.max_genus(); ++g) {
            const auto& c = table.cell(g, m);
            if (c.count == 0) continue;
            os << m << "  " << g << "  " << c.count << "  " << c.ahf << "  " << ratio_cell(c.ahf, c.count) << "\n";
        }
    }
    if (!table.complete) {
        os << "PARTIAL: interrupted; rows with genus <= " << table.complete_through << " are exact\n";
    }
    return os.str();
}

std::string census_csv(const CensusTable& table, int multiplicity_filter) {
    std::ostringstream os;
    os << "genus,multiplicity,count,ahf_count\n";
    for (int g = 0; g <= table.max_genus(); ++g) {
        for (int m = 1; m <= g + 1; ++m) {
            if (multiplicity_filter && m != multiplicity_filter) continue;
            const auto& c = table.cell(g, m);
            if (c.count == 0) continue;
            os << g << "," << m << "," << c.count << "," << c.ahf << "\n";
        }
    }
    return os.str();
}

std::vector<std::vector<Int>> enumerate_small_oracle(int genus) {
    if (genus < 0 || genus > 8) {
        throw std::invalid_argument("subset-search oracle is limited to genus <= 8");
    }
    const int limit = 2 * genus;  // every gap lies in [1, 2g]
    std::vector<std::vector<Int>> out;
    std::vector<bool> gap(static_cast<std::size_t>(limit) + 1, false);
    int chosen = 0;

    auto in_s = [&](int n) { return n > limit || !gap[static_cast<std::size_t>(n)]; };
    auto emit = [&] {
        std::vector<Int> gens;
        for (int n = 1; n <= 3 * genus + 1; ++n) {
            if (!in_s(n)) continue;
            bool decomposes = false;
            for (int x = 1; x <= n / 2 && !decomposes; ++x) decomposes = in_s(x) && in_s(n - x);
            if (!decomposes) gens.push_back(n);
        }
        out.push_back(std::move(gens));
    };
    // Decide n = 1, 2, ... in order. A non-gap n must keep x + n out of the
    // gaps for every earlier non-gap x; since gaps are decided in increasing
    // order it suffices to check, when marking n a gap, that no two smaller
    // elements sum to n.
    auto recurse = [&](auto&& self, int n) -> void {
        if (n > limit) {
            if (chosen == genus) emit();
            return;
        }
        const int remaining = limit - n + 1;
        if (chosen + remaining < genus) return;
        // n as a gap
        if (chosen < genus) {
            bool sum_of_elements = false;
            for (int x = 1; x <= n / 2 && !sum_of_elements; ++x) sum_of_elements = in_s(x) && in_s(n - x);
            if (!sum_of_elements) {
                gap[static_cast<std::size_t>(n)] = true;
                ++chosen;
                self(self, n + 1);
                --chosen;
                gap[static_cast<std::size_t>(n)] = false;
            }
        }
        // n as an element
        self(self, n + 1);
    };
    recurse(recurse, 1);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace aperylab

namespace aperylab {

ReferenceComparison compare_with_reference(const CensusTable& table) {
    if (table.max_genus() < kReferenceGenus) {
        throw std::invalid_argument("reference comparison needs a census through genus 25");
    }
    ReferenceComparison cmp;
    for (int g = 0; g <= kReferenceGenus; ++g) {
        cmp.computed_total += table.total(g);
        cmp.computed_ahf += table.ahf_total(g);
    }
    cmp.discrepancy = cmp.computed_total != cmp.expected_total || cmp.computed_ahf != cmp.expected_ahf;
    return cmp;
}

std::string ReferenceComparison::str() const {
    std::ostringstream os;
    os << "genus <= " << kReferenceGenus << ": total " << computed_total << " (reference " << expected_total
       << "), AHF " << computed_ahf << " (reference " << expected_ahf << ")";
    if (discrepancy) {
        os << " DISCREPANCY: total differs by " << static_cast<long long>(computed_total) - static_cast<long long>(expected_total)
           << ", AHF differs by " << static_cast<long long>(computed_ahf) - static_cast<long long>(expected_ahf);
    }
    return os.str();
}

}  // namespace aperylab
