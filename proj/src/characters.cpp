#include "futaki/characters.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <string>

#include "futaki/errors.hpp"

namespace futaki {

namespace {

// C(n, r) as an exact integer; zero for n < 0, r < 0 or n < r.
mpz_class binom(long n, long r) {
    if (n < 0 || r < 0 || n < r)
        return 0;
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
    return out;
}

// Exact determinant by Bareiss fraction-free elimination (det [] = 1).
mpz_class determinant(std::vector<std::vector<mpz_class>> m) {
    const std::size_t n = m.size();
    if (n == 0)
        return 1;
    mpz_class prev(1);
    int sign = 1;
    for (std::size_t j = 0; j < n; ++j) {
        std::size_t pivot = j;
        while (pivot < n && m[pivot][j] == 0)
            ++pivot;
        if (pivot == n)
            return 0;
        if (pivot != j) {
            std::swap(m[pivot], m[j]);
            sign = -sign;
        }
        for (std::size_t i = j + 1; i < n; ++i)
            for (std::size_t c = j + 1; c < n; ++c)
                m[i][c] = (m[j][j] * m[i][c] - m[i][j] * m[j][c]) / prev;
        prev = m[j][j];
    }
    return sign * m[n - 1][n - 1];
}

// Rank of an integer matrix (fraction-free row reduction).
std::size_t rank(std::vector<std::vector<mpz_class>> m) {
    if (m.empty())
        return 0;
    const std::size_t cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t j = 0; j < cols && r < m.size(); ++j) {
        std::size_t pivot = r;
        while (pivot < m.size() && m[pivot][j] == 0)
            ++pivot;
        if (pivot == m.size())
            continue;
        std::swap(m[pivot], m[r]);
        for (std::size_t i = r + 1; i < m.size(); ++i) {
            if (m[i][j] == 0)
                continue;
            const mpz_class a = m[r][j], b = m[i][j];
            for (std::size_t c = 0; c < cols; ++c)
                m[i][c] = a * m[i][c] - b * m[r][c];
        }
        ++r;
    }
    return r;
}

long checked_long(const mpz_class& v) {
    if (!v.fits_slong_p())
        throw invalid_input("polytope facet data exceeds machine range");
    return v.get_si();
}

// Raw ambient character (linearization excluded): chi and the plain
// monomial weight sum  (sum_i alpha_i) * C(k+d, d+1).
struct RawCharacter {
    mpz_class chi;
    mpz_class weight;
};

RawCharacter ambient_raw(const AmbientSpec& spec, long k) {
    if (k < 0)
        return {0, 0};
    RawCharacter out;
    out.chi = binom(k + spec.d(), spec.d());
    const long weight_sum = std::accumulate(spec.weights().begin(), spec.weights().end(), 0L);
    out.weight = mpz_class(weight_sum) * binom(k + spec.d(), spec.d() + 1);
    return out;
}

// Enumerated counterpart of ambient_raw: walks all exponent vectors I with
// |I| = k in d+1 variables.  Cap guards the monomial count.
RawCharacter ambient_raw_enumerated(const AmbientSpec& spec, long k, std::uint64_t cap) {
    if (k < 0)
        return {0, 0};
    const mpz_class predicted = binom(k + spec.d(), spec.d());
    if (predicted > mpz_class(static_cast<unsigned long>(cap)))
        throw resource_limit("brute-force enumeration of " + predicted.get_str()
                             + " exponent vectors exceeds the cap of " + std::to_string(cap));

    // The last coordinate absorbs the remaining degree, so recursion over
    // the first d positions visits each exponent vector exactly once.
    const auto& alpha = spec.weights();
    RawCharacter out{0, 0};
    std::function<void(std::size_t, long, long)> walk = [&](std::size_t pos, long remaining,
                                                            long partial) {
        if (pos + 1 == alpha.size()) {
            out.chi += 1;
            out.weight += partial + alpha[pos] * remaining;
            return;
        }
        for (long e = 0; e <= remaining; ++e)
            walk(pos + 1, remaining - e, partial + alpha[pos] * e);
    };
    walk(0, k, 0);
    return out;
}

} // namespace

AmbientSpec::AmbientSpec(int d, std::vector<long> weights, long linearization_shift)
    : d_(d), weights_(std::move(weights)), shift_(linearization_shift) {
    if (d_ < 1)
        throw invalid_input("ambient dimension d must be >= 1");
    if (weights_.size() != static_cast<std::size_t>(d_) + 1)
        throw invalid_input("ambient weight vector must have length d+1");
}

HypersurfaceSpec::HypersurfaceSpec(AmbientSpec ambient, int degree, long defining_weight)
    : ambient_(std::move(ambient)), degree_(degree), defining_weight_(defining_weight) {
    if (degree_ < 1)
        throw invalid_input("hypersurface degree must be >= 1");
    // An invariant polynomial of this degree and weight must be possible:
    // defining_weight has to be <alpha, I> for some exponent vector with
    // |I| = degree.
    std::set<long> sums{0};
    for (int step = 0; step < degree_; ++step) {
        std::set<long> next;
        for (long s : sums)
            for (long a : ambient_.weights())
                next.insert(s + a);
        sums = std::move(next);
    }
    if (sums.find(defining_weight_) == sums.end())
        throw invalid_input("no invariant polynomial of degree " + std::to_string(degree_)
                            + " can have weight " + std::to_string(defining_weight_));
}

PolytopeSpec::PolytopeSpec(int n, std::vector<std::vector<long>> vertices,
                           std::vector<long> weights, long linearization_shift)
    : n_(n), vertices_(std::move(vertices)), weights_(std::move(weights)),
      shift_(linearization_shift) {
    if (n_ < 1)
        throw invalid_input("polytope dimension n must be >= 1");
    if (weights_.size() != static_cast<std::size_t>(n_))
        throw invalid_input("polytope weight vector must have length n");
    for (const auto& v : vertices_)
        if (v.size() != static_cast<std::size_t>(n_))
            throw invalid_input("every polytope vertex must have n coordinates");

    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
    if (vertices_.size() < static_cast<std::size_t>(n_) + 1)
        throw invalid_input("polytope is not full-dimensional");

    // Full-dimensionality: the edge vectors from the first vertex span Z^n.
    std::vector<std::vector<mpz_class>> edges;
    for (std::size_t i = 1; i < vertices_.size(); ++i) {
        std::vector<mpz_class> row(n_);
        for (int j = 0; j < n_; ++j)
            row[static_cast<std::size_t>(j)] = vertices_[i][static_cast<std::size_t>(j)]
                                               - vertices_[0][static_cast<std::size_t>(j)];
        edges.push_back(std::move(row));
    }
    if (rank(edges) != static_cast<std::size_t>(n_))
        throw invalid_input("polytope is not full-dimensional");

    // Supporting hyperplanes through n vertices.  Every facet contains at
    // least n vertices, so the collection cuts out exactly conv(vertices);
    // extra supporting (non-facet) hyperplanes are valid inequalities and
    // harmless.
    std::set<std::pair<std::vector<long>, long>> seen;
    std::vector<std::size_t> idx(static_cast<std::size_t>(n_));
    const std::size_t V = vertices_.size();
    // Iterate over all n-subsets of vertex indices.
    for (std::size_t i = 0; i < static_cast<std::size_t>(n_); ++i)
        idx[i] = i;
    while (true) {
        // Normal via cofactors of the (n-1) x n matrix of edge vectors.
        std::vector<std::vector<mpz_class>> rows;
        for (std::size_t i = 1; i < idx.size(); ++i) {
            std::vector<mpz_class> row(n_);
            for (int j = 0; j < n_; ++j)
                row[static_cast<std::size_t>(j)] =
                    vertices_[idx[i]][static_cast<std::size_t>(j)]
                    - vertices_[idx[0]][static_cast<std::size_t>(j)];
            rows.push_back(std::move(row));
        }
        std::vector<mpz_class> normal(n_);
        bool nonzero = false;
        for (int j = 0; j < n_; ++j) {
            std::vector<std::vector<mpz_class>> minor;
            for (const auto& row : rows) {
                std::vector<mpz_class> r;
                for (int c = 0; c < n_; ++c)
                    if (c != j)
                        r.push_back(row[static_cast<std::size_t>(c)]);
                minor.push_back(std::move(r));
            }
            mpz_class dj = determinant(std::move(minor));
            if (j % 2 == 1)
                dj = -dj;
            if (dj != 0)
                nonzero = true;
            normal[static_cast<std::size_t>(j)] = dj;
        }
        if (nonzero) {
            mpz_class offset = 0;
            for (int j = 0; j < n_; ++j)
                offset += normal[static_cast<std::size_t>(j)]
                          * vertices_[idx[0]][static_cast<std::size_t>(j)];
            bool all_le = true, all_ge = true;
            for (const auto& v : vertices_) {
                mpz_class s = 0;
                for (int j = 0; j < n_; ++j)
                    s += normal[static_cast<std::size_t>(j)] * v[static_cast<std::size_t>(j)];
                if (s > offset)
                    all_le = false;
                if (s < offset)
                    all_ge = false;
            }
            if (all_le || all_ge) {
                std::vector<mpz_class> a = normal;
                mpz_class c = offset;
                if (!all_le) { // flip to the <= orientation
                    for (auto& x : a)
                        x = -x;
                    c = -c;
                }
                mpz_class g = ::abs(c);
                for (const auto& x : a)
                    g = gcd(g, x);
                if (g > 1) {
                    for (auto& x : a)
                        x /= g;
                    c /= g;
                }
                std::vector<long> an(n_);
                for (int j = 0; j < n_; ++j)
                    an[static_cast<std::size_t>(j)] = checked_long(a[static_cast<std::size_t>(j)]);
                if (seen.insert({an, checked_long(c)}).second)
                    half_spaces_.push_back({an, checked_long(c)});
            }
        }
        // Next n-subset in lexicographic order.
        bool advanced = false;
        for (std::size_t i = idx.size(); i-- > 0;) {
            if (idx[i] + (idx.size() - i) < V) {
                ++idx[i];
                for (std::size_t j = i + 1; j < idx.size(); ++j)
                    idx[j] = idx[j - 1] + 1;
                advanced = true;
                break;
            }
        }
        if (!advanced)
            break;
    }
}

CharacterSample ambient_character(const AmbientSpec& spec, long k) {
    if (k < 0)
        throw invalid_input("character exponent k must be >= 0");
    RawCharacter raw = ambient_raw(spec, k);
    const mpz_class weight = raw.weight + mpz_class(spec.linearization_shift()) * k * raw.chi;
    return {k, Rational(raw.chi), Rational(weight)};
}

CharacterSample hypersurface_character(const HypersurfaceSpec& spec, long k) {
    if (k < 0)
        throw invalid_input("character exponent k must be >= 0");
    const RawCharacter full = ambient_raw(spec.ambient(), k);
    const RawCharacter sub = ambient_raw(spec.ambient(), k - spec.degree());
    const mpz_class chi = full.chi - sub.chi;
    mpz_class weight = full.weight - sub.weight - mpz_class(spec.defining_weight()) * sub.chi;
    weight += mpz_class(spec.ambient().linearization_shift()) * k * chi;
    return {k, Rational(chi), Rational(weight)};
}

CharacterSample polytope_character(const PolytopeSpec& spec, long k) {
    if (k < 0)
        throw invalid_input("character exponent k must be >= 0");
    const int n = spec.n();
    std::vector<long> lo(static_cast<std::size_t>(n)), hi(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        long mn = spec.vertices()[0][static_cast<std::size_t>(j)];
        long mx = mn;
        for (const auto& v : spec.vertices()) {
            mn = std::min(mn, v[static_cast<std::size_t>(j)]);
            mx = std::max(mx, v[static_cast<std::size_t>(j)]);
        }
        lo[static_cast<std::size_t>(j)] = mn * k;
        hi[static_cast<std::size_t>(j)] = mx * k;
    }

    mpz_class count = 0, wsum = 0;
    std::vector<long> m = lo;
    while (true) {
        bool inside = true;
        for (const auto& hs : spec.half_spaces()) {
            long long s = 0;
            for (int j = 0; j < n; ++j)
                s += static_cast<long long>(hs.normal[static_cast<std::size_t>(j)])
                     * m[static_cast<std::size_t>(j)];
            if (s > static_cast<long long>(hs.offset) * k) {
                inside = false;
                break;
            }
        }
        if (inside) {
            count += 1;
            for (int j = 0; j < n; ++j)
                wsum += mpz_class(spec.weights()[static_cast<std::size_t>(j)])
                        * m[static_cast<std::size_t>(j)];
        }
        int j = 0;
        while (j < n && m[static_cast<std::size_t>(j)] == hi[static_cast<std::size_t>(j)]) {
            m[static_cast<std::size_t>(j)] = lo[static_cast<std::size_t>(j)];
            ++j;
        }
        if (j == n)
            break;
        ++m[static_cast<std::size_t>(j)];
    }

    const mpz_class weight = wsum + mpz_class(spec.linearization_shift()) * k * count;
    return {k, Rational(count), Rational(weight)};
}

CharacterSample brute_force_character(const AmbientSpec& spec, long k, std::uint64_t cap) {
    if (k < 0)
        throw invalid_input("character exponent k must be >= 0");
    RawCharacter raw = ambient_raw_enumerated(spec, k, cap);
    const mpz_class weight = raw.weight + mpz_class(spec.linearization_shift()) * k * raw.chi;
    return {k, Rational(raw.chi), Rational(weight)};
}

CharacterSample brute_force_character(const HypersurfaceSpec& spec, long k, std::uint64_t cap) {
    if (k < 0)
        throw invalid_input("character exponent k must be >= 0");
    const RawCharacter full = ambient_raw_enumerated(spec.ambient(), k, cap);
    const RawCharacter sub = ambient_raw_enumerated(spec.ambient(), k - spec.degree(), cap);
    const mpz_class chi = full.chi - sub.chi;
    mpz_class weight = full.weight - sub.weight - mpz_class(spec.defining_weight()) * sub.chi;
    weight += mpz_class(spec.ambient().linearization_shift()) * k * chi;
    return {k, Rational(chi), Rational(weight)};
}

CharacterSample character(const VarietySpec& spec, long k) {
    return std::visit(
        [k](const auto& s) -> CharacterSample {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, AmbientSpec>)
                return ambient_character(s, k);
            else if constexpr (std::is_same_v<T, HypersurfaceSpec>)
                return hypersurface_character(s, k);
            else
                return polytope_character(s, k);
        },
        spec);
}

int dimension(const VarietySpec& spec) {
    return std::visit(
        [](const auto& s) -> int {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, AmbientSpec>)
                return s.d();
            else if constexpr (std::is_same_v<T, HypersurfaceSpec>)
                return s.ambient().d() - 1;
            else
                return s.n();
        },
        spec);
}

VarietySpec with_shift(const VarietySpec& spec, long lambda) {
    return std::visit([lambda](const auto& s) -> VarietySpec { return s.with_shift(lambda); },
                      spec);
}

} // namespace futaki
