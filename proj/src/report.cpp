#include "lefzeta/report.hpp"

#include "json.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lefzeta {

namespace {

using json = nlohmann::ordered_json;

std::string answer_name(Answer a) { return a == Answer::Yes ? "yes" : "unknown"; }

std::string join_betti(const std::vector<int>& betti) {
    std::ostringstream out;
    for (std::size_t i = 0; i < betti.size(); ++i) {
        if (i) out << ' ';
        out << betti[i];
    }
    return out.str();
}

std::string certificate_sentence(int total_dimension) {
    std::ostringstream out;
    out << "L(f^k) = 0 for all k >= 1, certified by the finite horizon k <= "
        << total_dimension << " (a refinement specific to this library)";
    return out.str();
}

} // namespace

AnalysisReport analyze(const RingEndomorphism& f, const AnalysisOptions& options) {
    const ModelPtr& model = f.model();
    AnalysisReport r;
    r.space = model->presentation.name;
    r.shape = recognize_shape(model);
    r.betti = betti_profile(model->basis);
    r.total_dimension = model->basis.total_dimension;
    r.horizon = options.max_power.value_or(std::max(10, r.total_dimension));
    if (r.horizon < 1) throw std::invalid_argument("the power horizon must be at least 1");

    int certificate = std::max(r.horizon, r.total_dimension);
    std::vector<Rational> sequence = lefschetz_sequence(f, certificate);
    r.lefschetz.assign(sequence.begin(), sequence.begin() + r.horizon);
    r.zeta = zeta_function(f);
    r.lppf = is_lppf(f);

    bool vanishes_to_dimension =
        std::all_of(sequence.begin(), sequence.begin() + r.total_dimension,
                    [](const Rational& v) { return v == 0; });
    if (r.lppf != vanishes_to_dimension) {
        throw std::logic_error(
            "internal inconsistency: the zeta function and the Lefschetz "
            "numbers disagree about periodic-point freeness");
    }
    ValidationResult series = zeta_series_check(f, 10);
    if (!series) throw std::logic_error(series.message);

    auto quotient = quotient_basis(model);
    r.eigen = eigen_summary(induced_map(f, quotient));
    if (satisfies_extended_conditions(model)) {
        r.classification = classify_lppf_extended(r.eigen);
    }
    r.verdict = options.forced_mode ? periodic_point_verdict(f, *options.forced_mode)
                                    : periodic_point_verdict(f);
    return r;
}

std::string render_text(const AnalysisReport& r) {
    std::ostringstream out;
    out << "space: " << r.space << '\n';
    out << "shape: " << shape_name(r.shape.kind) << " (" << r.shape.detail << ")\n";
    out << "betti: " << join_betti(r.betti) << '\n';
    out << "total dimension: " << r.total_dimension << '\n';
    out << "lefschetz numbers (k = 1.." << r.horizon << "):";
    for (const auto& value : r.lefschetz) out << ' ' << rational_to_string(value);
    out << '\n';
    out << "zeta function: " << r.zeta.to_string() << '\n';
    out << "periodic-point free: " << (r.lppf ? "yes" : "no");
    if (r.lppf) out << " (" << certificate_sentence(r.total_dimension) << ")";
    out << '\n';
    if (r.classification) {
        out << "vanishing mechanism: " << lppf_classification_name(*r.classification) << '\n';
    }
    out << "odd characteristic polynomial: " << r.eigen.odd_char_poly.to_string() << '\n';
    out << "even characteristic polynomial: " << r.eigen.even_char_poly.to_string() << '\n';
    out << "odd block has eigenvalue 1: " << (r.eigen.has_eigenvalue_one_odd ? "yes" : "no")
        << '\n';
    out << "odd block has eigenvalue -1: "
        << (r.eigen.has_eigenvalue_minus_one_odd ? "yes" : "no") << '\n';
    out << "even block has eigenvalue -1: "
        << (r.eigen.has_eigenvalue_minus_one_even ? "yes" : "no") << '\n';
    out << "odd root-of-unity orders:";
    if (r.eigen.root_of_unity_orders_odd.empty()) {
        out << " none";
    } else {
        for (std::size_t i = 0; i < r.eigen.root_of_unity_orders_odd.size(); ++i) {
            out << (i ? ", " : " ") << r.eigen.root_of_unity_orders_odd[i];
        }
    }
    out << '\n';
    out << "verdict: " << answer_name(r.verdict.has_periodic_point) << " ["
        << r.verdict.criterion << "]\n";
    out << "  " << r.verdict.explanation << '\n';
    return out.str();
}

std::string render_json(const AnalysisReport& r) {
    json j;
    j["space"] = r.space;
    j["shape"] = {{"kind", shape_name(r.shape.kind)}, {"detail", r.shape.detail}};
    j["betti"] = r.betti;
    j["total_dimension"] = r.total_dimension;
    j["horizon"] = r.horizon;
    json seq = json::array();
    for (const auto& value : r.lefschetz) seq.push_back(rational_to_string(value));
    j["lefschetz_numbers"] = std::move(seq);
    j["zeta"] = {{"numerator", r.zeta.numerator().to_string()},
                 {"denominator", r.zeta.denominator().to_string()}};
    j["periodic_point_free"] = r.lppf;
    j["certificate"] = r.lppf ? json(certificate_sentence(r.total_dimension)) : json(nullptr);
    j["vanishing_mechanism"] =
        r.classification ? json(lppf_classification_name(*r.classification)) : json(nullptr);
    j["eigen"] = {
        {"odd_char_poly", r.eigen.odd_char_poly.to_string()},
        {"even_char_poly", r.eigen.even_char_poly.to_string()},
        {"odd_has_eigenvalue_one", r.eigen.has_eigenvalue_one_odd},
        {"odd_has_eigenvalue_minus_one", r.eigen.has_eigenvalue_minus_one_odd},
        {"even_has_eigenvalue_minus_one", r.eigen.has_eigenvalue_minus_one_even},
        {"odd_root_of_unity_orders", r.eigen.root_of_unity_orders_odd},
    };
    j["verdict"] = {
        {"has_periodic_point", answer_name(r.verdict.has_periodic_point)},
        {"criterion", r.verdict.criterion},
        {"explanation", r.verdict.explanation},
        {"witness_power",
         r.verdict.witness_power ? json(*r.verdict.witness_power) : json(nullptr)},
    };
    return j.dump(2) + "\n";
}

RecognizeReport recognize_space(const SpaceFile& file) {
    RecognizeReport r;
    r.space = file.name;
    if (file.presentation) {
        ModelPtr model = make_model(*file.presentation);
        r.betti = betti_profile(model->basis);
        r.shape = recognize_shape(model);
    } else {
        r.betti = *file.betti_only;
        r.betti_check = betti_compatible_with_exterior(r.betti);
    }
    return r;
}

std::string render_text(const RecognizeReport& r) {
    std::ostringstream out;
    out << "space: " << r.space << '\n';
    out << "betti: " << join_betti(r.betti) << '\n';
    if (r.shape) {
        out << "shape: " << shape_name(r.shape->kind) << " (" << r.shape->detail << ")\n";
    } else {
        if (r.betti_check->compatible) {
            out << "exterior-compatible profile: yes (odd generator degrees";
            for (std::size_t i = 0; i < r.betti_check->degrees.size(); ++i) {
                out << (i ? ", " : " ") << r.betti_check->degrees[i];
            }
            out << ")\n";
        } else {
            out << "exterior-compatible profile: no (not rational exterior: "
                << r.betti_check->reason << ")\n";
        }
    }
    return out.str();
}

std::string render_json(const RecognizeReport& r) {
    json j;
    j["space"] = r.space;
    j["betti"] = r.betti;
    if (r.shape) {
        j["shape"] = {{"kind", shape_name(r.shape->kind)}, {"detail", r.shape->detail}};
    } else {
        json check;
        check["compatible"] = r.betti_check->compatible;
        if (r.betti_check->compatible) {
            check["odd_generator_degrees"] = r.betti_check->degrees;
        } else {
            check["reason"] = "not rational exterior: " + r.betti_check->reason;
        }
        j["exterior_profile_check"] = std::move(check);
    }
    return j.dump(2) + "\n";
}

} // namespace lefzeta
