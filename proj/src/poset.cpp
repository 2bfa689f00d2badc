#include "aperylab/poset.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <queue>
#include <sstream>

namespace aperylab {

AperyPoset::AperyPoset(const NumericalSemigroup& s) : elements_(s.apery_set()) {
    const std::size_t n = elements_.size();
    leq_.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            leq_[i * n + j] = s.contains(elements_[j] - elements_[i]);
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (s.is_atom(elements_[j] - elements_[i])) {
                covers_.emplace_back(i, j);
            }
        }
    }

    // covers_ is sorted by source index, and sources precede targets.
    shortest_depth_.assign(n, std::numeric_limits<Int>::max());
    longest_depth_.assign(n, -1);
    shortest_depth_[0] = longest_depth_[0] = 0;
    for (const auto& [from, to] : covers_) {
        shortest_depth_[to] = std::min(shortest_depth_[to], shortest_depth_[from] + 1);
        longest_depth_[to] = std::max(longest_depth_[to], longest_depth_[from] + 1);
    }
}

bool is_graded(const AperyPoset& p) { return p.shortest_depth() == p.longest_depth(); }

namespace {

// Maximum matching in a bipartite graph with equal side sizes.
class HopcroftKarp {
public:
    explicit HopcroftKarp(const std::vector<std::vector<std::size_t>>& adj)
        : adj_(adj), n_(adj.size()), match_left_(n_, kFree), match_right_(n_, kFree), dist_(n_) {}

    std::size_t run() {
        std::size_t matching = 0;
        while (bfs()) {
            for (std::size_t u = 0; u < n_; ++u) {
                if (match_left_[u] == kFree && dfs(u)) ++matching;
            }
        }
        return matching;
    }

private:
    static constexpr std::size_t kFree = std::numeric_limits<std::size_t>::max();
    static constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();

    bool bfs() {
        std::queue<std::size_t> queue;
        for (std::size_t u = 0; u < n_; ++u) {
            if (match_left_[u] == kFree) {
                dist_[u] = 0;
                queue.push(u);
            } else {
                dist_[u] = kInf;
            }
        }
        bool found = false;
        while (!queue.empty()) {
            const std::size_t u = queue.front();
            queue.pop();
            for (std::size_t v : adj_[u]) {
                const std::size_t w = match_right_[v];
                if (w == kFree) {
                    found = true;
                } else if (dist_[w] == kInf) {
                    dist_[w] = dist_[u] + 1;
                    queue.push(w);
                }
            }
        }
        return found;
    }

    bool dfs(std::size_t u) {
        for (std::size_t v : adj_[u]) {
            const std::size_t w = match_right_[v];
            if (w == kFree || (dist_[w] == dist_[u] + 1 && dfs(w))) {
                match_left_[u] = v;
                match_right_[v] = u;
                return true;
            }
        }
        dist_[u] = kInf;
        return false;
    }

    const std::vector<std::vector<std::size_t>>& adj_;
    std::size_t n_;
    std::vector<std::size_t> match_left_;
    std::vector<std::size_t> match_right_;
    std::vector<std::size_t> dist_;
};

}  // namespace

std::size_t width(const AperyPoset& p) {
    // Dilworth: width = n - (maximum matching in the strict comparability graph).
    const std::size_t n = p.size();
    std::vector<std::vector<std::size_t>> adj(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (p.leq(i, j)) adj[i].push_back(j);
        }
    }
    return n - HopcroftKarp(adj).run();
}

std::vector<Int> minimal_nonzero_elements(const AperyPoset& p) {
    std::vector<Int> out;
    for (const auto& [from, to] : p.covers()) {
        if (from == 0) out.push_back(p.elements()[to]);
    }
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> transitive_reduction(const AperyPoset& p) {
    const std::size_t n = p.size();
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!p.leq(i, j)) continue;
            bool covered = true;
            for (std::size_t k = i + 1; k < j && covered; ++k) {
                covered = !(p.leq(i, k) && p.leq(k, j));
            }
            if (covered) out.emplace_back(i, j);
        }
    }
    return out;
}

std::string to_dot(const AperyPoset& p, const std::string& name) {
    std::ostringstream os;
    os << "digraph " << name << " {\n";
    os << "  rankdir=BT;\n";
    os << "  node [shape=plaintext];\n";
    for (Int v : p.elements()) {
        os << "  n" << v << " [label=\"" << v << "\"];\n";
    }
    for (const auto& [from, to] : p.covers()) {
        os << "  n" << p.elements()[from] << " -> n" << p.elements()[to] << ";\n";
    }
    std::map<Int, std::vector<Int>> ranks;
    for (std::size_t i = 0; i < p.size(); ++i) {
        ranks[p.longest_depth()[i]].push_back(p.elements()[i]);
    }
    for (const auto& [depth, members] : ranks) {
        os << "  { rank=same;";
        for (Int v : members) os << " n" << v << ";";
        os << " }\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace aperylab
