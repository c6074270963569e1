#include "foldmv/root_datum.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace foldmv {

Mat inverse_unimodular(const Mat& m) {
    QMat q(m.size());
    for (size_t i = 0; i < m.size(); ++i) q[i] = to_qvec(m[i]);
    QMat inv = inverse_qmat(q);
    Mat r(m.size(), Vec(m.size(), 0));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m.size(); ++j) {
            check_internal(inv[i][j].get_den() == 1, "matrix inverse not integral");
            r[i][j] = inv[i][j].get_num().get_si();
        }
    return r;
}

QMat inverse_qmat(const QMat& m) {
    size_t n = m.size();
    QMat a = m;
    QMat inv(n, QVec(n, Rat(0)));
    for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        check_internal(piv < n, "singular matrix");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        Rat d = a[col][col];
        for (size_t j = 0; j < n; ++j) {
            a[col][j] /= d;
            inv[col][j] /= d;
        }
        for (size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col] == 0) continue;
            Rat f = a[row][col];
            for (size_t j = 0; j < n; ++j) {
                a[row][j] -= f * a[col][j];
                inv[row][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

std::string format_vec(const Vec& v) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    return os.str();
}

std::string format_qvec(const QVec& v) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i].get_str();
    }
    return os.str();
}

std::string RootDatum::key() const {
    std::ostringstream os;
    os << label << ':' << rank;
    for (const Vec& row : cartan) os << ':' << format_vec(row);
    return os.str();
}

namespace {

Mat standard_cartan(char letter, int n) {
    auto chain = [](int n) {
        Mat a(n, Vec(n, 0));
        for (int i = 0; i < n; ++i) a[i][i] = 2;
        for (int i = 0; i + 1 < n; ++i) a[i][i + 1] = a[i + 1][i] = -1;
        return a;
    };
    switch (letter) {
        case 'A': {
            require(n >= 1, "type A needs rank >= 1");
            return chain(n);
        }
        case 'B': {
            require(n >= 2, "type B needs rank >= 2");
            Mat a = chain(n);
            a[n - 1][n - 2] = -2;  // alpha_n short, so its coroot is long
            return a;
        }
        case 'C': {
            require(n >= 2, "type C needs rank >= 2");
            Mat a = chain(n);
            a[n - 2][n - 1] = -2;
            return a;
        }
        case 'D': {
            require(n >= 4, "type D needs rank >= 4");
            Mat a = chain(n);
            a[n - 2][n - 1] = a[n - 1][n - 2] = 0;
            a[n - 3][n - 1] = a[n - 1][n - 3] = -1;
            return a;
        }
        case 'E': {
            require(n == 6, "type E supported only at rank 6");
            Mat a(6, Vec(6, 0));
            for (int i = 0; i < 6; ++i) a[i][i] = 2;
            // Bourbaki E6: chain 1-3-4-5-6 with node 2 attached to node 4.
            auto edge = [&](int i, int j) { a[i - 1][j - 1] = a[j - 1][i - 1] = -1; };
            edge(1, 3);
            edge(3, 4);
            edge(4, 5);
            edge(5, 6);
            edge(2, 4);
            return a;
        }
        case 'F': {
            require(n == 4, "type F needs rank 4");
            Mat a = chain(4);
            a[2][1] = -2;  // alpha_3 short
            a[1][2] = -1;
            return a;
        }
        case 'G': {
            require(n == 2, "type G needs rank 2");
            // Node 1 carries the long coroot (short root).
            return Mat{{2, -3}, {-1, 2}};
        }
        default:
            throw Error(std::string("unknown Cartan letter '") + letter + "'");
    }
}

}  // namespace

QVec coroot_symmetrizer(const Mat& a) {
    int n = static_cast<int>(a.size());
    QVec c(n, Rat(0));
    std::vector<int> todo;
    for (int start = 0; start < n; ++start) {
        if (c[start] != 0) continue;
        c[start] = 1;
        todo.push_back(start);
        while (!todo.empty()) {
            int i = todo.back();
            todo.pop_back();
            for (int j = 0; j < n; ++j) {
                if (i == j || a[i][j] == 0) continue;
                Rat want = c[i] * Rat(static_cast<long>(a[j][i])) /
                           Rat(static_cast<long>(a[i][j]));
                if (c[j] == 0) {
                    c[j] = want;
                    todo.push_back(j);
                } else {
                    require(c[j] == want, "Cartan matrix is not symmetrizable");
                }
            }
        }
    }
    // Normalize so the smallest entry is 1 (short coroots get squared length 2).
    Rat m = c[0];
    for (const Rat& x : c) m = std::min(m, x);
    for (Rat& x : c) x /= m;
    return c;
}

namespace {

void validate_cartan(const Mat& a) {
    int n = static_cast<int>(a.size());
    require(n >= 1, "empty Cartan matrix");
    for (int i = 0; i < n; ++i) {
        require(static_cast<int>(a[i].size()) == n, "Cartan matrix is not square");
        require(a[i][i] == 2, "Cartan diagonal entry is not 2");
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            require(a[i][j] <= 0, "positive off-diagonal Cartan entry");
            require((a[i][j] == 0) == (a[j][i] == 0), "asymmetric Cartan zero pattern");
        }
    }
    QVec c = coroot_symmetrizer(a);
    // Positive definiteness of G_ij = c_j a_ij via leading principal minors.
    QMat g(n, QVec(n, Rat(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g[i][j] = c[j] * Rat(static_cast<long>(a[i][j]));
    for (int k = 1; k <= n; ++k) {
        QMat sub(k, QVec(k));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) sub[i][j] = g[i][j];
        // Determinant by fraction-free-ish elimination on rationals.
        Rat det = 1;
        for (int col = 0; col < k; ++col) {
            int piv = col;
            while (piv < k && sub[piv][col] == 0) ++piv;
            require(piv < k, "Cartan matrix is not of finite type");
            if (piv != col) {
                std::swap(sub[piv], sub[col]);
                det = -det;
            }
            det *= sub[col][col];
            for (int row = col + 1; row < k; ++row) {
                Rat f = sub[row][col] / sub[col][col];
                for (int j = col; j < k; ++j) sub[row][j] -= f * sub[col][j];
            }
        }
        require(det > 0, "Cartan matrix is not of finite type");
    }
}

std::vector<Vec> closure_positive_coroots(const RootDatum& rd) {
    std::set<Vec> pos;
    std::vector<Vec> frontier;
    for (int i = 0; i < rd.rank; ++i) {
        Vec e = zero_vec(rd.rank);
        e[i] = 1;
        pos.insert(e);
        frontier.push_back(e);
    }
    while (!frontier.empty()) {
        std::vector<Vec> next;
        for (const Vec& v : frontier)
            for (int i = 0; i < rd.rank; ++i) {
                Vec w = reflect(rd, i, v);
                if (all_nonneg(w) && pos.insert(w).second) next.push_back(w);
            }
        frontier = std::move(next);
    }
    std::vector<Vec> out(pos.begin(), pos.end());
    std::sort(out.begin(), out.end(), [](const Vec& a, const Vec& b) {
        Int ha = height(a), hb = height(b);
        if (ha != hb) return ha < hb;
        return a < b;
    });
    return out;
}

}  // namespace

RootDatum datum_from_cartan(std::string label, Mat cartan) {
    validate_cartan(cartan);
    RootDatum rd;
    rd.label = std::move(label);
    rd.rank = static_cast<int>(cartan.size());
    rd.cartan = std::move(cartan);
    rd.fundamental_weights.resize(rd.rank);
    for (int i = 0; i < rd.rank; ++i) {
        QVec w(rd.rank, Rat(0));
        w[i] = 1;
        rd.fundamental_weights[i] = w;
    }
    rd.positive_coroots = closure_positive_coroots(rd);
    return rd;
}

RootDatum build_root_datum(const std::string& label) {
    require(label.size() >= 2, "Cartan label too short: '" + label + "'");
    char letter = static_cast<char>(std::toupper(label[0]));
    for (size_t i = 1; i < label.size(); ++i)
        require(std::isdigit(label[i]), "bad Cartan label: '" + label + "'");
    int n = std::stoi(label.substr(1));
    return datum_from_cartan(std::string(1, letter) + std::to_string(n),
                             standard_cartan(letter, n));
}

Int pair_simple_root(const RootDatum& rd, const Vec& mu, int j) {
    Int s = 0;
    for (int i = 0; i < rd.rank; ++i) s += mu[i] * rd.cartan[i][j];
    return s;
}

Rat pair_weight(const Vec& mu, const QVec& xi) {
    Rat s = 0;
    for (size_t i = 0; i < mu.size(); ++i) s += Rat(static_cast<long>(mu[i])) * xi[i];
    return s;
}

Vec reflect(const RootDatum& rd, int i, const Vec& mu) {
    Vec r = mu;
    r[i] -= pair_simple_root(rd, mu, i);
    return r;
}

QVec reflect_weight(const RootDatum& rd, int i, const QVec& xi) {
    QVec r = xi;
    for (int j = 0; j < rd.rank; ++j)
        r[j] -= xi[i] * Rat(static_cast<long>(rd.cartan[j][i]));
    return r;
}

bool leq_dominance(const Vec& mu, const Vec& nu) {
    return all_nonneg(sub(nu, mu));
}

bool is_dominant(const RootDatum& rd, const Vec& mu) {
    for (int i = 0; i < rd.rank; ++i)
        if (pair_simple_root(rd, mu, i) < 0) return false;
    return true;
}

void require_dominant(const RootDatum& rd, const Vec& mu) {
    require(static_cast<int>(mu.size()) == rd.rank, "coweight has the wrong rank");
    for (int i = 0; i < rd.rank; ++i) {
        Int p = pair_simple_root(rd, mu, i);
        require(p >= 0, "coweight is not dominant: pairing with alpha_" +
                            std::to_string(i + 1) + " is " + std::to_string(p));
    }
}

std::pair<Vec, std::vector<int>> dominant_representative(const RootDatum& rd, Vec mu) {
    std::vector<int> word;
    for (;;) {
        int neg = -1;
        for (int i = 0; i < rd.rank; ++i)
            if (pair_simple_root(rd, mu, i) < 0) {
                neg = i;
                break;
            }
        if (neg < 0) return {mu, word};
        mu = reflect(rd, neg, mu);
        word.push_back(neg);
        check_internal(word.size() <= 4 * rd.positive_coroots.size() + 4,
                       "dominant_representative failed to terminate");
    }
}

QVec simple_root_weight(const RootDatum& rd, int j) {
    QVec r(rd.rank);
    for (int i = 0; i < rd.rank; ++i) r[i] = Rat(static_cast<long>(rd.cartan[i][j]));
    return r;
}

}  // namespace foldmv
