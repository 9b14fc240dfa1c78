#include "lefzeta/indecomposables.hpp"

#include "lefzeta/errors.hpp"

#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>

namespace lefzeta {

namespace {

// Row space kept in reduced form (unit pivots, pivot columns cleared in the
// other rows), grown one vector at a time.
struct IncrementalSpan {
    std::vector<std::vector<Rational>> rows;
    std::vector<int> pivots;

    int rank() const { return static_cast<int>(rows.size()); }

    // Eliminates the span from v; the pivot column of what is left, -1 if none.
    int reduce(std::vector<Rational>& v) const {
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (v[pivots[r]] != 0) {
                Rational c = v[pivots[r]];
                for (std::size_t j = 0; j < v.size(); ++j)
                    v[j] -= c * rows[r][j];
            }
        }
        for (std::size_t j = 0; j < v.size(); ++j)
            if (v[j] != 0)
                return static_cast<int>(j);
        return -1;
    }

    // False when v was already in the span.
    bool insert(std::vector<Rational> v) {
        int p = reduce(v);
        if (p < 0)
            return false;
        Rational lead = v[p];
        for (auto& x : v)
            x /= lead;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r][p] != 0) {
                Rational c = rows[r][p];
                for (std::size_t j = 0; j < v.size(); ++j)
                    rows[r][j] -= c * v[j];
            }
        }
        rows.push_back(std::move(v));
        pivots.push_back(p);
        return true;
    }
};

long euler_phi(long m) {
    long result = m;
    for (long q = 2; q * q <= m; ++q) {
        if (m % q == 0) {
            result -= result / q;
            while (m % q == 0)
                m /= q;
        }
    }
    if (m > 1)
        result -= result / m;
    return result;
}

} // namespace

std::vector<Echelon> decomposable_subspace(const ModelPtr& model) {
    const auto& p = model->presentation;
    const auto& basis = model->basis;

    std::vector<BasisElement> positive;
    for (int d = 1; d <= basis.top_degree; ++d)
        for (const auto& e : basis.by_degree[d])
            positive.push_back(e);

    std::vector<std::vector<std::vector<Rational>>> rows(basis.top_degree + 1);
    for (std::size_t a = 0; a < positive.size(); ++a) {
        for (std::size_t b = a; b < positive.size(); ++b) {
            int d = degree_of(p, positive[a]) + degree_of(p, positive[b]);
            if (d > basis.top_degree)
                continue;
            AlgebraElement prod = cup(AlgebraElement::monomial(positive[a]),
                                      AlgebraElement::monomial(positive[b]), p);
            if (prod.is_zero())
                continue;
            rows[d].push_back(basis.coords(prod, d));
        }
    }

    std::vector<Echelon> result;
    for (int d = 0; d <= basis.top_degree; ++d) {
        QMatrix m(static_cast<int>(rows[d].size()), basis.dim(d));
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j)
                m(i, j) = rows[d][i][j];
        result.push_back(m.rref());
    }
    return result;
}

int QuotientBasis::total_dimension() const {
    int total = 0;
    for (int d : dims)
        total += d;
    return total;
}

std::vector<int> QuotientBasis::degrees_with_dim() const {
    std::vector<int> out;
    for (int d = 0; d <= top_degree; ++d)
        if (dims[d] > 0)
            out.push_back(d);
    return out;
}

QuotientBasis quotient_basis(const ModelPtr& model, RepresentativeOrder order) {
    const auto& basis = model->basis;
    auto dec = decomposable_subspace(model);

    QuotientBasis q;
    q.model = model;
    q.top_degree = basis.top_degree;
    q.reps_by_degree.resize(basis.top_degree + 1);
    q.projection.resize(basis.top_degree + 1);
    q.inclusion.resize(basis.top_degree + 1);
    q.dims.assign(basis.top_degree + 1, 0);

    q.projection[0] = QMatrix(0, 1);
    q.inclusion[0] = QMatrix(1, 0);

    for (int d = 1; d <= basis.top_degree; ++d) {
        int n = basis.dim(d);
        if (n == 0) {
            q.projection[d] = QMatrix(0, 0);
            q.inclusion[d] = QMatrix(0, 0);
            continue;
        }

        IncrementalSpan span;
        for (int r = 0; r < dec[d].rank; ++r)
            span.insert(dec[d].reduced.row(r));

        std::vector<int> rep_idx;
        for (int step = 0; step < n; ++step) {
            int idx = order == RepresentativeOrder::canonical ? step : n - 1 - step;
            std::vector<Rational> v(n, Rational(0));
            v[idx] = 1;
            if (span.insert(std::move(v))) {
                rep_idx.push_back(idx);
                q.reps_by_degree[d].push_back(basis.by_degree[d][idx]);
            }
        }
        int rank = static_cast<int>(rep_idx.size());
        q.dims[d] = rank;

        // Columns: representatives first, then a spanning set of the
        // decomposables; square and invertible by construction. The first
        // `rank` rows of the inverse read off quotient coordinates.
        QMatrix m(n, n);
        for (int c = 0; c < rank; ++c)
            m(rep_idx[c], c) = 1;
        for (int r = 0; r < dec[d].rank; ++r)
            for (int i = 0; i < n; ++i)
                m(i, rank + r) = dec[d].reduced(r, i);
        auto inv = m.inverse();
        if (!inv)
            throw std::logic_error("quotient change of basis is singular");

        QMatrix proj(rank, n);
        for (int r = 0; r < rank; ++r)
            for (int c = 0; c < n; ++c)
                proj(r, c) = (*inv)(r, c);
        q.projection[d] = std::move(proj);

        QMatrix incl(n, rank);
        for (int c = 0; c < rank; ++c)
            incl(rep_idx[c], c) = 1;
        q.inclusion[d] = std::move(incl);
    }
    return q;
}

InducedMap induced_map(const RingEndomorphism& f, const QuotientBasis& q) {
    if (!q.model)
        throw std::invalid_argument("quotient basis without a model");
    if (f.model() != q.model && !(f.model()->presentation == q.model->presentation))
        throw validation_error("endomorphism and quotient basis disagree on the presentation");

    InducedMap im;
    im.by_degree.resize(q.top_degree + 1);
    for (int d = 0; d <= q.top_degree; ++d)
        im.by_degree[d] = q.projection[d] * f.block(d) * q.inclusion[d];

    std::vector<QMatrix> odd_blocks, even_blocks;
    for (int d = 1; d <= q.top_degree; ++d) {
        if (q.dims[d] == 0)
            continue;
        if (d % 2 == 1) {
            im.odd_degrees.push_back(d);
            odd_blocks.push_back(im.by_degree[d]);
        } else {
            im.even_degrees.push_back(d);
            even_blocks.push_back(im.by_degree[d]);
        }
    }
    im.odd_block = direct_sum(odd_blocks);
    im.even_block = direct_sum(even_blocks);
    return im;
}

Polynomial cyclotomic(int m) {
    if (m < 1)
        throw std::invalid_argument("cyclotomic order must be >= 1");
    // Divide t^d - 1 by the lower-order factors, divisors in ascending order.
    std::map<int, Polynomial> phi;
    for (int d = 1; d <= m; ++d) {
        if (m % d != 0)
            continue;
        Polynomial q = Polynomial::monomial(d) - Polynomial::one();
        for (const auto& [e, lower] : phi) {
            if (d % e == 0)
                q = Polynomial::divmod(q, lower).first;
        }
        phi[d] = q;
    }
    return phi[m];
}

std::vector<int> root_of_unity_orders(const Polynomial& p) {
    if (p.is_zero())
        throw std::invalid_argument("the zero polynomial vanishes on every root of unity");
    std::vector<int> out;
    int n = p.degree();
    if (n <= 0)
        return out;
    long bound = 2L * n * n;
    for (long m = 1; m <= bound; ++m) {
        if (euler_phi(m) > n)
            continue;
        if (Polynomial::divmod(p, cyclotomic(static_cast<int>(m))).second.is_zero())
            out.push_back(static_cast<int>(m));
    }
    return out;
}

EigenSummary eigen_summary(const InducedMap& m) {
    EigenSummary s;
    s.odd_char_poly = m.odd_block.char_poly();
    s.even_char_poly = m.even_block.char_poly();
    s.has_eigenvalue_one_odd = s.odd_char_poly(Rational(1)) == 0;
    s.has_eigenvalue_minus_one_odd = s.odd_char_poly(Rational(-1)) == 0;
    s.has_eigenvalue_minus_one_even = s.even_char_poly(Rational(-1)) == 0;
    s.root_of_unity_orders_odd = root_of_unity_orders(s.odd_char_poly);
    return s;
}

EvenPartInfo extended_even_part_info(const ModelPtr& model) {
    const auto& p = model->presentation;
    int m = p.even.size();
    EvenPartInfo info;

    std::map<int, std::vector<int>> classes_by_degree;
    for (int j = 1; j <= m; ++j)
        classes_by_degree[p.even.basis[j - 1].degree].push_back(j);

    // Decomposables of the even part alone: spans of e_i * e_j per degree,
    // coordinates relative to the classes of that degree.
    std::map<int, IncrementalSpan> spans;
    for (int i = 1; i <= m; ++i) {
        for (int j = i; j <= m; ++j) {
            int d = p.even.basis[i - 1].degree + p.even.basis[j - 1].degree;
            auto it = classes_by_degree.find(d);
            if (it == classes_by_degree.end())
                continue;
            const auto& combo = p.even.product(i, j);
            std::vector<Rational> v;
            v.reserve(it->second.size());
            for (int idx : it->second)
                v.push_back(combo[idx]);
            spans[d].insert(std::move(v));
        }
    }

    std::vector<int> gens;
    for (const auto& [d, classes] : classes_by_degree) {
        IncrementalSpan& span = spans[d];
        int added = 0;
        int rep = -1;
        for (std::size_t t = 0; t < classes.size(); ++t) {
            std::vector<Rational> v(classes.size(), Rational(0));
            v[t] = 1;
            if (span.insert(std::move(v))) {
                if (added == 0)
                    rep = classes[t];
                ++added;
            }
        }
        if (added > 1) {
            info.reason = "even part has " + std::to_string(added) +
                          " indecomposables in degree " + std::to_string(d);
            return info;
        }
        if (added == 1)
            gens.push_back(rep);
    }

    int r = static_cast<int>(gens.size());
    if (r > 12) {
        info.reason = "too many even generators for the shape check";
        return info;
    }
    for (int g : gens) {
        const auto& combo = p.even.product(g, g);
        for (const Rational& c : combo) {
            if (c != 0) {
                info.reason = "even generator '" + p.even.basis[g - 1].name +
                              "' does not square to zero";
                return info;
            }
        }
    }
    if ((std::size_t(1) << r) != std::size_t(m) + 1) {
        info.reason = "even part dimension " + std::to_string(m + 1) + " is not 2^" +
                      std::to_string(r);
        return info;
    }

    // Products of distinct generators must form a basis of the even part.
    std::vector<AlgebraElement> products(std::size_t(1) << r);
    IncrementalSpan all;
    for (std::uint64_t s = 0; s < (std::uint64_t(1) << r); ++s) {
        if (s == 0) {
            products[0] = AlgebraElement::unit();
        } else {
            int low = std::countr_zero(s);
            AlgebraElement gen =
                AlgebraElement::monomial(BasisElement{0, std::uint32_t(gens[low])});
            products[s] = cup(gen, products[s & (s - 1)], p);
        }
        std::vector<Rational> v(static_cast<std::size_t>(m) + 1, Rational(0));
        for (const auto& [mono, coeff] : products[s].terms()) {
            if (mono.odd_mask != 0)
                throw std::logic_error("even product left the even part");
            v[mono.even_index] = coeff;
        }
        if (!all.insert(std::move(v))) {
            info.reason = "products of the even generators are linearly dependent";
            return info;
        }
    }

    info.extended_shaped = true;
    info.generator_indices = std::move(gens);
    return info;
}

} // namespace lefzeta
