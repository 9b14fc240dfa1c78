#include "lefzeta/endomorphism.hpp"

#include "lefzeta/errors.hpp"
#include "lefzeta/indecomposables.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace lefzeta {

GradedLinearMap::GradedLinearMap(ModelPtr model, std::vector<QMatrix> blocks)
    : model_(std::move(model)), blocks_(std::move(blocks)) {
    if (!model_)
        throw std::invalid_argument("null model");
    const auto& basis = model_->basis;
    if (static_cast<int>(blocks_.size()) != basis.top_degree + 1)
        throw validation_error("expected one block per degree, 0 through " +
                               std::to_string(basis.top_degree));
    for (int d = 0; d <= basis.top_degree; ++d) {
        if (blocks_[d].rows() != basis.dim(d) || blocks_[d].cols() != basis.dim(d))
            throw validation_error("block in degree " + std::to_string(d) + " is " +
                                   std::to_string(blocks_[d].rows()) + "x" +
                                   std::to_string(blocks_[d].cols()) + ", expected " +
                                   std::to_string(basis.dim(d)) + "x" +
                                   std::to_string(basis.dim(d)));
    }
    if (blocks_[0](0, 0) != Rational(1))
        throw validation_error("degree-0 block must fix the unit class");
}

GradedLinearMap GradedLinearMap::identity(ModelPtr model) {
    if (!model)
        throw std::invalid_argument("null model");
    std::vector<QMatrix> blocks;
    for (int d = 0; d <= model->basis.top_degree; ++d)
        blocks.push_back(QMatrix::identity(model->basis.dim(d)));
    return GradedLinearMap(std::move(model), std::move(blocks));
}

const QMatrix& GradedLinearMap::block(int degree) const {
    if (degree < 0 || degree >= static_cast<int>(blocks_.size()))
        throw std::out_of_range("no block in degree " + std::to_string(degree));
    return blocks_[degree];
}

AlgebraElement GradedLinearMap::apply(const AlgebraElement& a) const {
    const auto& basis = model_->basis;
    AlgebraElement out;
    for (const auto& [mono, coeff] : a.terms()) {
        auto pos = basis.position.find(mono);
        if (pos == basis.position.end())
            throw validation_error("element does not belong to the presentation");
        auto [d, idx] = pos->second;
        const QMatrix& m = blocks_[d];
        for (int i = 0; i < m.rows(); ++i) {
            if (m(i, idx) != 0)
                out.add_term(basis.by_degree[d][i], coeff * m(i, idx));
        }
    }
    return out;
}

bool GradedLinearMap::same_model(const GradedLinearMap& o) const {
    return model_ == o.model_ || model_->presentation == o.model_->presentation;
}

bool GradedLinearMap::operator==(const GradedLinearMap& o) const {
    return same_model(o) && blocks_ == o.blocks_;
}

namespace {

// Coordinates of an element of the even part (no odd factors allowed) in the
// basis 1, e_1, ..., e_m.
std::vector<Rational> even_part_coords(const ModelPtr& model, const AlgebraElement& a) {
    int m = model->presentation.even.size();
    std::vector<Rational> v(static_cast<std::size_t>(m) + 1, Rational(0));
    for (const auto& [mono, coeff] : a.terms()) {
        if (mono.odd_mask != 0)
            throw validation_error("expected an element of the even part");
        v[mono.even_index] = coeff;
    }
    return v;
}

// Derives images of even basis classes that were not given explicitly. Only
// possible when the even part is freely spanned by square-zero generators:
// each class is then a unique combination of products of distinct generators,
// and the image is the same combination of products of the generator images.
void complete_even_images(const ModelPtr& model,
                          std::vector<std::optional<AlgebraElement>>& even_images,
                          const std::vector<int>& missing) {
    const auto& p = model->presentation;
    EvenPartInfo info = extended_even_part_info(model);
    if (!info.extended_shaped) {
        std::ostringstream os;
        os << "missing image for even class '" << p.even.basis[missing.front() - 1].name
           << "' (images may only be omitted when the even part is freely spanned by "
              "square-zero generators: "
           << info.reason << ")";
        throw validation_error(os.str());
    }
    int r = static_cast<int>(info.generator_indices.size());
    for (int g : info.generator_indices) {
        if (!even_images[g])
            throw validation_error("missing image for even generator '" +
                                   p.even.basis[g - 1].name + "'");
    }

    // Subset products of the generators, and of their images, in one pass.
    int m = p.even.size();
    std::vector<AlgebraElement> source_products(std::size_t(1) << r);
    std::vector<AlgebraElement> image_products(std::size_t(1) << r);
    QMatrix span(m + 1, 1 << r);
    for (std::uint64_t s = 0; s < (std::uint64_t(1) << r); ++s) {
        if (s == 0) {
            source_products[0] = AlgebraElement::unit();
            image_products[0] = AlgebraElement::unit();
        } else {
            int low = std::countr_zero(s);
            int g = info.generator_indices[low];
            AlgebraElement gen = AlgebraElement::monomial(BasisElement{0, std::uint32_t(g)});
            source_products[s] = cup(gen, source_products[s & (s - 1)], p);
            image_products[s] = cup(*even_images[g], image_products[s & (s - 1)], p);
        }
        auto coords = even_part_coords(model, source_products[s]);
        for (int i = 0; i <= m; ++i)
            span(i, static_cast<int>(s)) = coords[i];
    }

    for (int j : missing) {
        std::vector<Rational> target(static_cast<std::size_t>(m) + 1, Rational(0));
        target[j] = 1;
        auto combo = solve_linear(span, target);
        if (!combo)
            throw validation_error("even class '" + p.even.basis[j - 1].name +
                                   "' is not a combination of generator products");
        AlgebraElement image;
        for (std::size_t s = 0; s < combo->size(); ++s) {
            if ((*combo)[s] != 0)
                image += (*combo)[s] * image_products[s];
        }
        even_images[j] = std::move(image);
    }
}

} // namespace

RingEndomorphism from_generator_images(const ModelPtr& model,
                                       const std::map<std::string, AlgebraElement>& images) {
    if (!model)
        throw std::invalid_argument("null model");
    const auto& p = model->presentation;
    const auto& basis = model->basis;

    // name -> (is_odd, index); odd indices 0-based, even 1-based.
    std::map<std::string, std::pair<bool, int>> slots;
    for (int i = 0; i < p.odd_count(); ++i)
        slots[p.odd_generators[i].name] = {true, i};
    for (int j = 1; j <= p.even.size(); ++j)
        slots[p.even.basis[j - 1].name] = {false, j};

    std::vector<std::optional<AlgebraElement>> odd_images(p.odd_count());
    std::vector<std::optional<AlgebraElement>> even_images(p.even.size() + 1);
    even_images[0] = AlgebraElement::unit();

    for (const auto& [name, image] : images) {
        auto it = slots.find(name);
        if (it == slots.end())
            throw validation_error("no generator or basis class named '" + name + "'");
        auto [is_odd, idx] = it->second;
        int want = is_odd ? p.odd_generators[idx].degree : p.even.basis[idx - 1].degree;
        for (const auto& [mono, coeff] : image.terms()) {
            if (!basis.position.count(mono))
                throw validation_error("image of '" + name +
                                       "' contains a monomial outside the presentation");
        }
        auto deg = homogeneous_degree(p, image);
        if (!deg)
            throw validation_error("image of '" + name + "' is not homogeneous");
        if (!image.is_zero() && *deg != want)
            throw validation_error("image of '" + name + "' has degree " + std::to_string(*deg) +
                                   ", expected " + std::to_string(want));
        if (is_odd)
            odd_images[idx] = image;
        else
            even_images[idx] = image;
    }

    for (int i = 0; i < p.odd_count(); ++i) {
        if (!odd_images[i])
            throw validation_error("missing image for generator '" + p.odd_generators[i].name +
                                   "'");
    }
    std::vector<int> missing;
    for (int j = 1; j <= p.even.size(); ++j)
        if (!even_images[j])
            missing.push_back(j);
    if (!missing.empty()) {
        if (p.hybrid())
            throw validation_error("missing image for even class '" +
                                   p.even.basis[missing.front() - 1].name + "'");
        complete_even_images(model, even_images, missing);
    }

    // Image of each basis monomial: the product of its factors' images.
    std::vector<QMatrix> blocks;
    for (int d = 0; d <= basis.top_degree; ++d) {
        int n = basis.dim(d);
        QMatrix block(n, n);
        for (int col = 0; col < n; ++col) {
            const BasisElement& mono = basis.by_degree[d][col];
            AlgebraElement image = *even_images[mono.even_index];
            std::uint64_t mask = mono.odd_mask;
            while (mask != 0) {
                int i = 63 - std::countl_zero(mask); // highest factor first: x_i . (rest)
                image = cup(*odd_images[i], image, p);
                mask &= ~(std::uint64_t(1) << i);
            }
            auto coords = basis.coords(image, d);
            for (int row = 0; row < n; ++row)
                block(row, col) = coords[row];
        }
        blocks.push_back(std::move(block));
    }

    GradedLinearMap map(model, std::move(blocks));
    if (auto check = validate_multiplicative(map); !check)
        throw validation_error(check.message);
    return RingEndomorphism{std::move(map)};
}

RingEndomorphism identity_endomorphism(ModelPtr model) {
    return RingEndomorphism{GradedLinearMap::identity(std::move(model))};
}

ValidationResult validate_multiplicative(const GradedLinearMap& f) {
    const auto& model = f.model();
    const auto& p = model->presentation;
    const auto& basis = model->basis;

    if (f.block(0)(0, 0) != Rational(1))
        return ValidationResult::fail("the unit class is not fixed");

    std::vector<BasisElement> monomials;
    for (int d = 1; d <= basis.top_degree; ++d)
        for (const auto& e : basis.by_degree[d])
            monomials.push_back(e);

    for (std::size_t a = 0; a < monomials.size(); ++a) {
        AlgebraElement ea = AlgebraElement::monomial(monomials[a]);
        AlgebraElement fa = f.apply(ea);
        for (std::size_t b = a; b < monomials.size(); ++b) {
            AlgebraElement eb = AlgebraElement::monomial(monomials[b]);
            AlgebraElement lhs = f.apply(cup(ea, eb, p));
            AlgebraElement rhs = cup(fa, f.apply(eb), p);
            if (lhs != rhs)
                return ValidationResult::fail(
                    "not multiplicative: F(a . b) != F(a) . F(b) for a = '" +
                    name_of(p, monomials[a]) + "', b = '" + name_of(p, monomials[b]) + "'");
        }
    }
    return ValidationResult::pass();
}

RingEndomorphism as_endomorphism(GradedLinearMap f) {
    if (auto check = validate_multiplicative(f); !check)
        throw validation_error(check.message);
    return RingEndomorphism{std::move(f)};
}

GradedLinearMap compose(const GradedLinearMap& f, const GradedLinearMap& g) {
    if (!f.same_model(g))
        throw validation_error("cannot compose maps over different presentations");
    std::vector<QMatrix> blocks;
    for (int d = 0; d <= f.top_degree(); ++d)
        blocks.push_back(f.block(d) * g.block(d));
    return GradedLinearMap(f.model(), std::move(blocks));
}

RingEndomorphism compose(const RingEndomorphism& f, const RingEndomorphism& g) {
    return RingEndomorphism{compose(f.map, g.map)};
}

GradedLinearMap power(const GradedLinearMap& f, long k) {
    if (k < 1)
        throw std::invalid_argument("power requires k >= 1");
    GradedLinearMap result = GradedLinearMap::identity(f.model());
    GradedLinearMap square = f;
    long e = k;
    while (true) {
        if (e & 1)
            result = compose(result, square);
        e >>= 1;
        if (e == 0)
            break;
        square = compose(square, square);
    }
    return result;
}

RingEndomorphism power(const RingEndomorphism& f, long k) {
    return RingEndomorphism{power(f.map, k)};
}

Rational trace_degree(const GradedLinearMap& f, int degree) {
    if (degree < 0 || degree > f.top_degree())
        return Rational(0);
    return f.block(degree).trace();
}

Rational unsigned_trace(const GradedLinearMap& f) {
    Rational sum(0);
    for (int d = 0; d <= f.top_degree(); ++d)
        sum += f.block(d).trace();
    return sum;
}

Rational alternating_trace(const GradedLinearMap& f) {
    Rational sum(0);
    for (int d = 0; d <= f.top_degree(); ++d) {
        if (d % 2 == 0)
            sum += f.block(d).trace();
        else
            sum -= f.block(d).trace();
    }
    return sum;
}

TensorTraceSplit tensor_trace_decomposition(const RingEndomorphism& f) {
    const auto& model = f.model();
    const auto& p = model->presentation;
    if (p.hybrid())
        throw shape_error("tensor trace decomposition requires a tensor presentation");

    const auto& basis = model->basis;
    TensorTraceSplit split{Rational(0), Rational(0), Rational(0), Rational(0)};
    for (int d = 0; d <= basis.top_degree; ++d) {
        const auto& monos = basis.by_degree[d];
        for (int i = 0; i < static_cast<int>(monos.size()); ++i) {
            const BasisElement& e = monos[i];
            if (e.even_index == 0) {
                const Rational& diag = f.block(d)(i, i);
                split.odd_trace += diag;
                if (std::popcount(e.odd_mask) % 2 == 0)
                    split.odd_trace_signed += diag;
                else
                    split.odd_trace_signed -= diag;
            }
            if (e.odd_mask == 0) {
                const Rational& diag = f.block(d)(i, i);
                split.even_trace += diag;
                split.even_trace_signed += diag;
            }
        }
    }
    // The unit monomial sits in both factors; it was counted once in each,
    // which is what the product formulas need.
    return split;
}

} // namespace lefzeta
