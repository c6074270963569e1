#include "foldmv/weyl.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <sstream>

namespace foldmv {

struct WeylGroupBuilder {
    static void build(WeylGroup& g, const RootDatum& rd);
};

namespace {

// Hard cap on group enumeration; everything the tool supports end to end
// (up to E6, |W| = 51840) fits well below it.
constexpr int kGroupCap = 200000;

struct Registry {
    std::mutex mu;
    std::map<std::string, std::unique_ptr<struct Entry>> entries;
};

struct Entry {
    WeylGroup group;
    std::once_flag graph_once;
    std::unique_ptr<WordGraph> graph;
    std::exception_ptr graph_error;
    std::mutex path_mu;
    std::map<std::pair<int, int>, std::vector<BraidMove>> path_memo;
};

Registry& registry() {
    static Registry r;
    return r;
}

Entry& entry_for(const RootDatum& rd) {
    Registry& r = registry();
    std::lock_guard<std::mutex> lock(r.mu);
    auto it = r.entries.find(rd.key());
    if (it == r.entries.end()) {
        auto e = std::make_unique<Entry>();
        WeylGroupBuilder::build(e->group, rd);
        it = r.entries.emplace(rd.key(), std::move(e)).first;
    }
    return *it->second;
}

}  // namespace

void WeylGroupBuilder::build(WeylGroup& g, const RootDatum& rd) {
    g.datum = rd;
    g.m = static_cast<int>(rd.positive_coroots.size());
    std::vector<Mat> gens(rd.rank);
    for (int i = 0; i < rd.rank; ++i) gens[i] = simple_reflection_matrix(rd, i);

    g.elements.push_back(identity_mat(rd.rank));
    g.index_[g.elements[0]] = 0;
    g.length.push_back(0);
    g.canonical_word.push_back({});
    for (size_t at = 0; at < g.elements.size(); ++at) {
        g.right.emplace_back(rd.rank, -1);
        for (int i = 0; i < rd.rank; ++i) {
            Mat next = mul_mat(g.elements[at], gens[i]);
            auto it = g.index_.find(next);
            if (it == g.index_.end()) {
                int idx = static_cast<int>(g.elements.size());
                require(idx < kGroupCap, "Weyl group of " + rd.label +
                                             " exceeds the supported size cap");
                g.index_[next] = idx;
                g.elements.push_back(std::move(next));
                g.length.push_back(g.length[at] + 1);
                ReducedWord w = g.canonical_word[at];
                w.push_back(i);
                g.canonical_word.push_back(std::move(w));
                g.right[at][i] = idx;
            } else {
                g.right[at][i] = it->second;
            }
        }
    }
    g.inverse.resize(g.elements.size());
    for (size_t idx = 0; idx < g.elements.size(); ++idx) {
        ReducedWord rev(g.canonical_word[idx].rbegin(), g.canonical_word[idx].rend());
        Mat inv = element_of(rd, rev).mat;
        auto it = g.index_.find(inv);
        check_internal(it != g.index_.end(), "inverse not found in group");
        g.inverse[idx] = it->second;
    }
    int maxlen = 0;
    for (size_t idx = 0; idx < g.elements.size(); ++idx)
        if (g.length[idx] > maxlen) {
            maxlen = g.length[idx];
            g.w0 = static_cast<int>(idx);
        }
    check_internal(maxlen == g.m, "longest element length disagrees with root count");
}

namespace {

WordGraph build_word_graph(const RootDatum& rd, long long cap) {
    WordGraph wg;
    wg.words = all_reduced_words(rd, longest_element(rd), cap);
    for (size_t i = 0; i < wg.words.size(); ++i)
        wg.index[wg.words[i]] = static_cast<int>(i);
    wg.adjacency.resize(wg.words.size());
    for (size_t i = 0; i < wg.words.size(); ++i) {
        for (const BraidMove& mv : braid_moves(rd, wg.words[i])) {
            ReducedWord nb = apply_braid_move(rd, wg.words[i], mv);
            auto it = wg.index.find(nb);
            check_internal(it != wg.index.end(), "braid move left the word set");
            wg.adjacency[i].emplace_back(it->second, mv);
        }
    }
    return wg;
}

}  // namespace

int WeylGroup::index_of(const Mat& mat) const {
    auto it = index_.find(mat);
    check_internal(it != index_.end(), "matrix is not a Weyl group element");
    return it->second;
}

const WeylGroup& weyl_group(const RootDatum& rd) { return entry_for(rd).group; }

const WordGraph& word_graph_w0(const RootDatum& rd, long long cap) {
    Entry& e = entry_for(rd);
    std::call_once(e.graph_once, [&] {
        try {
            e.graph = std::make_unique<WordGraph>(build_word_graph(rd, cap));
        } catch (...) {
            e.graph_error = std::current_exception();
        }
    });
    if (e.graph_error) std::rethrow_exception(e.graph_error);
    return *e.graph;
}

Mat simple_reflection_matrix(const RootDatum& rd, int i) {
    require(i >= 0 && i < rd.rank, "node index out of range");
    Mat m = identity_mat(rd.rank);
    for (int j = 0; j < rd.rank; ++j) m[i][j] -= rd.cartan[j][i];
    return m;
}

WeylElement element_of(const RootDatum& rd, const ReducedWord& word) {
    Mat m = identity_mat(rd.rank);
    for (int i : word) m = mul_mat(m, simple_reflection_matrix(rd, i));
    return WeylElement{std::move(m)};
}

int length_of(const RootDatum& rd, const WeylElement& w) {
    int count = 0;
    for (const Vec& beta : rd.positive_coroots) {
        Vec img = apply_mat(w.mat, beta);
        for (Int x : img)
            if (x < 0) {
                ++count;
                break;
            }
    }
    return count;
}

bool is_reduced(const RootDatum& rd, const ReducedWord& word) {
    return length_of(rd, element_of(rd, word)) == static_cast<int>(word.size());
}

WeylElement longest_element(const RootDatum& rd) {
    // Greedy ascent: keep appending a length-increasing generator.
    WeylElement w{identity_mat(rd.rank)};
    int len = 0;
    bool grew = true;
    while (grew) {
        grew = false;
        for (int i = 0; i < rd.rank; ++i) {
            WeylElement next{mul_mat(w.mat, simple_reflection_matrix(rd, i))};
            if (length_of(rd, next) > len) {
                w = std::move(next);
                ++len;
                grew = true;
                break;
            }
        }
    }
    check_internal(len == static_cast<int>(rd.positive_coroots.size()),
                   "longest element has wrong length");
    return w;
}

int braid_order(const RootDatum& rd, int i, int j) {
    require(i >= 0 && i < rd.rank && j >= 0 && j < rd.rank && i != j,
            "braid order needs two distinct nodes");
    Int p = rd.cartan[i][j] * rd.cartan[j][i];
    switch (p) {
        case 0: return 2;
        case 1: return 3;
        case 2: return 4;
        case 3: return 6;
        default: throw InternalError("Cartan product outside finite type");
    }
}

std::vector<ReducedWord> all_reduced_words(const RootDatum& rd, const WeylElement& w,
                                           long long cap) {
    std::map<Mat, std::vector<ReducedWord>> memo;
    long long produced = 0;
    std::vector<Mat> gens(rd.rank);
    for (int i = 0; i < rd.rank; ++i) gens[i] = simple_reflection_matrix(rd, i);

    auto rec = [&](auto&& self, const Mat& m, int len) -> const std::vector<ReducedWord>& {
        auto it = memo.find(m);
        if (it != memo.end()) return it->second;
        std::vector<ReducedWord> out;
        if (len == 0) {
            out.push_back({});
            ++produced;
        } else {
            for (int i = 0; i < rd.rank; ++i) {
                Mat prev = mul_mat(m, gens[i]);
                if (length_of(rd, WeylElement{prev}) != len - 1) continue;
                for (const ReducedWord& u : self(self, prev, len - 1)) {
                    ReducedWord word = u;
                    word.push_back(i);
                    out.push_back(std::move(word));
                    if (++produced > cap)
                        throw CapExceeded("reduced word enumeration exceeds cap", produced);
                }
            }
        }
        return memo.emplace(m, std::move(out)).first->second;
    };

    std::vector<ReducedWord> words = rec(rec, w.mat, length_of(rd, w));
    std::sort(words.begin(), words.end());
    return words;
}

ReducedWord apply_braid_move(const RootDatum& rd, const ReducedWord& word,
                             const BraidMove& mv) {
    int len = static_cast<int>(word.size());
    require(mv.pos >= 0 && mv.order >= 2 && mv.pos + mv.order <= len,
            "braid move window out of range");
    require(mv.node_a != mv.node_b, "braid move needs two distinct nodes");
    require(braid_order(rd, mv.node_a, mv.node_b) == mv.order,
            "braid move order disagrees with the Cartan matrix");
    for (int k = 0; k < mv.order; ++k) {
        int expect = (k % 2 == 0) ? mv.node_a : mv.node_b;
        require(word[mv.pos + k] == expect, "braid move window does not alternate");
    }
    ReducedWord out = word;
    for (int k = 0; k < mv.order; ++k)
        out[mv.pos + k] = (k % 2 == 0) ? mv.node_b : mv.node_a;
    return out;
}

std::vector<BraidMove> braid_moves(const RootDatum& rd, const ReducedWord& word) {
    std::vector<BraidMove> out;
    int len = static_cast<int>(word.size());
    for (int pos = 0; pos + 1 < len; ++pos) {
        int a = word[pos], b = word[pos + 1];
        if (a == b) continue;
        int d = braid_order(rd, a, b);
        if (pos + d > len) continue;
        bool ok = true;
        for (int k = 0; k < d && ok; ++k)
            ok = word[pos + k] == ((k % 2 == 0) ? a : b);
        if (ok) out.push_back(BraidMove{pos, d, a, b});
    }
    return out;
}

std::vector<BraidMove> braid_path(const RootDatum& rd, const ReducedWord& from,
                                  const ReducedWord& to, long long cap) {
    require(from.size() == to.size(), "braid path endpoints have different lengths");
    WeylElement wf = element_of(rd, from);
    WeylElement wt = element_of(rd, to);
    require(wf == wt, "braid path endpoints are words of different elements");
    int len = static_cast<int>(from.size());
    require(length_of(rd, wf) == len, "braid path endpoint is not reduced");
    if (from == to) return {};

    const bool is_w0 = len == static_cast<int>(rd.positive_coroots.size());
    Entry* ent = is_w0 ? &entry_for(rd) : nullptr;

    // Local graph for non-longest elements; the cached one for w0.
    WordGraph local;
    const WordGraph* wg;
    if (is_w0) {
        wg = &word_graph_w0(rd, cap);
    } else {
        local = [&] {
            WordGraph g;
            g.words = all_reduced_words(rd, wf, cap);
            for (size_t i = 0; i < g.words.size(); ++i)
                g.index[g.words[i]] = static_cast<int>(i);
            g.adjacency.resize(g.words.size());
            for (size_t i = 0; i < g.words.size(); ++i)
                for (const BraidMove& mv : braid_moves(rd, g.words[i])) {
                    ReducedWord nb = apply_braid_move(rd, g.words[i], mv);
                    g.adjacency[i].emplace_back(g.index.at(nb), mv);
                }
            return g;
        }();
        wg = &local;
    }

    int src = wg->index.at(from);
    int dst = wg->index.at(to);
    if (ent) {
        std::lock_guard<std::mutex> lock(ent->path_mu);
        auto it = ent->path_memo.find({src, dst});
        if (it != ent->path_memo.end()) return it->second;
    }

    std::vector<int> prev(wg->words.size(), -1);
    std::vector<BraidMove> via(wg->words.size());
    std::vector<int> queue{src};
    prev[src] = src;
    for (size_t at = 0; at < queue.size() && prev[dst] < 0; ++at) {
        int cur = queue[at];
        for (const auto& [nb, mv] : wg->adjacency[cur]) {
            if (prev[nb] >= 0) continue;
            prev[nb] = cur;
            via[nb] = mv;
            queue.push_back(nb);
        }
    }
    check_internal(prev[dst] >= 0, "word graph is disconnected");
    std::vector<BraidMove> path;
    for (int cur = dst; cur != src; cur = prev[cur]) path.push_back(via[cur]);
    std::reverse(path.begin(), path.end());
    if (ent) {
        std::lock_guard<std::mutex> lock(ent->path_mu);
        ent->path_memo.emplace(std::make_pair(src, dst), path);
    }
    return path;
}

bool leq_twisted(const RootDatum& rd, const Vec& mu, const Vec& nu, const WeylElement& w) {
    require(static_cast<int>(mu.size()) == rd.rank && static_cast<int>(nu.size()) == rd.rank,
            "coweight has the wrong dimension");
    Mat winv = inverse_unimodular(w.mat);
    return leq_dominance(apply_mat(winv, mu), apply_mat(winv, nu));
}

}  // namespace foldmv
