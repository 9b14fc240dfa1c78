#include "lefzeta/space_io.hpp"

#include "lefzeta/errors.hpp"
#include "lefzeta/rational.hpp"

#include "json.hpp"

#include <bit>
#include <cstdint>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

namespace lefzeta {

namespace {

using json = nlohmann::ordered_json;

json parse_json(const std::string& text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw parse_error(std::string("invalid ") + what + ": " + e.what());
    }
}

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed,
                         const std::string& where) {
    for (const auto& item : obj.items()) {
        if (!allowed.count(item.key())) {
            throw parse_error("unknown key '" + item.key() + "' in " + where);
        }
    }
}

std::string require_string(const json& obj, const char* key, const std::string& where) {
    if (!obj.contains(key) || !obj[key].is_string()) {
        throw parse_error(where + " needs a string '" + key + "'");
    }
    return obj[key].get<std::string>();
}

int require_int(const json& obj, const char* key, const std::string& where) {
    if (!obj.contains(key) || !obj[key].is_number_integer()) {
        throw parse_error(where + " needs an integer '" + key + "'");
    }
    return obj[key].get<int>();
}

std::vector<GeneratorSpec> parse_generator_list(const json& arr, const std::string& where) {
    if (!arr.is_array()) throw parse_error(where + " must be an array");
    std::vector<GeneratorSpec> out;
    for (const auto& entry : arr) {
        if (!entry.is_object()) throw parse_error("each entry of " + where + " must be an object");
        reject_unknown_keys(entry, {"name", "degree"}, where);
        GeneratorSpec g;
        g.name = require_string(entry, "name", where);
        g.degree = require_int(entry, "degree", where);
        out.push_back(std::move(g));
    }
    return out;
}

// How a name used inside a product entry resolves: the unit class, an odd
// generator (0-based index), or an even basis class (1-based index).
struct Slot {
    enum Kind { Unit, Odd, Even } kind;
    int index;
};

Slot resolve(const std::string& name, const RingPresentation& p) {
    if (name == "1") return {Slot::Unit, 0};
    for (int i = 0; i < static_cast<int>(p.odd_generators.size()); ++i) {
        if (p.odd_generators[i].name == name) return {Slot::Odd, i};
    }
    for (int j = 0; j < static_cast<int>(p.even.basis.size()); ++j) {
        if (p.even.basis[j].name == name) return {Slot::Even, j + 1};
    }
    throw parse_error("unknown class '" + name + "' in even_products");
}

BasisElement slot_monomial(const Slot& s) {
    switch (s.kind) {
        case Slot::Unit: return BasisElement{};
        case Slot::Odd: return BasisElement{std::uint64_t{1} << s.index, 0};
        default: return BasisElement{0, static_cast<std::uint32_t>(s.index)};
    }
}

}  // namespace

SpaceFile parse_space_text(const std::string& text) {
    json j = parse_json(text, "space file");
    if (!j.is_object()) throw parse_error("space file must be a JSON object");
    reject_unknown_keys(j,
                        {"name", "betti_only", "odd_generators", "even_basis",
                         "even_products", "odd_products_vanish"},
                        "space file");

    SpaceFile out;
    out.name = require_string(j, "name", "space file");

    if (j.contains("betti_only")) {
        if (j.contains("odd_generators") || j.contains("even_basis") ||
            j.contains("even_products") || j.contains("odd_products_vanish")) {
            throw parse_error("betti_only cannot be combined with generators or products");
        }
        if (!j["betti_only"].is_array()) throw parse_error("betti_only must be an array");
        std::vector<int> betti;
        for (const auto& entry : j["betti_only"]) {
            if (!entry.is_number_integer() || entry.get<int>() < 0) {
                throw parse_error("betti_only entries must be nonnegative integers");
            }
            betti.push_back(entry.get<int>());
        }
        out.betti_only = std::move(betti);
        return out;
    }

    RingPresentation p;
    p.name = out.name;
    if (j.contains("odd_generators")) {
        p.odd_generators = parse_generator_list(j["odd_generators"], "odd_generators");
    }
    if (j.contains("even_basis")) {
        p.even.basis = parse_generator_list(j["even_basis"], "even_basis");
    }
    p.even.init_products();
    if (j.contains("odd_products_vanish")) {
        if (!j["odd_products_vanish"].is_boolean()) {
            throw parse_error("odd_products_vanish must be a boolean");
        }
        p.odd_products_vanish = j["odd_products_vanish"].get<bool>();
    }

    if (j.contains("even_products")) {
        const json& arr = j["even_products"];
        if (!arr.is_array()) throw parse_error("even_products must be an array");
        std::set<std::pair<int, int>> seen_even;
        std::set<std::pair<int, int>> seen_mixed;
        for (const auto& entry : arr) {
            if (!entry.is_object()) throw parse_error("each product entry must be an object");
            reject_unknown_keys(entry, {"left", "right", "result"}, "even_products");
            Slot left = resolve(require_string(entry, "left", "a product entry"), p);
            Slot right = resolve(require_string(entry, "right", "a product entry"), p);
            if (left.kind == Slot::Unit || right.kind == Slot::Unit) {
                throw parse_error("products with the unit class are implicit; remove the entry");
            }
            if (!entry.contains("result") || !entry["result"].is_array()) {
                throw parse_error("a product entry needs a 'result' array");
            }

            // Parse the right-hand side as (basis name, coefficient) pairs.
            std::vector<std::pair<Slot, Rational>> terms;
            std::set<std::string> seen_names;
            for (const auto& term : entry["result"]) {
                if (!term.is_object()) throw parse_error("each result term must be an object");
                reject_unknown_keys(term, {"basis", "coeff"}, "a result term");
                std::string basis_name = require_string(term, "basis", "a result term");
                if (!seen_names.insert(basis_name).second) {
                    throw parse_error("result lists '" + basis_name + "' twice");
                }
                Rational coeff = parse_rational(require_string(term, "coeff", "a result term"));
                terms.emplace_back(resolve(basis_name, p), coeff);
            }

            if (left.kind == Slot::Odd && right.kind == Slot::Odd) {
                throw parse_error(
                    "products of two odd generators are fixed by the relations; "
                    "remove the entry");
            }
            if (left.kind == Slot::Even && right.kind == Slot::Even) {
                int a = left.index, b = right.index;
                if (!seen_even.insert({std::min(a, b), std::max(a, b)}).second) {
                    throw parse_error("duplicate product entry for a pair of even classes");
                }
                std::vector<Rational> combo(p.even.size() + 1, Rational(0));
                for (const auto& [slot, coeff] : terms) {
                    if (slot.kind == Slot::Odd) {
                        throw parse_error(
                            "the product of two even classes cannot contain an odd generator");
                    }
                    combo[slot.kind == Slot::Unit ? 0 : slot.index] = coeff;
                }
                p.even.set_product(a, b, std::move(combo));
            } else {
                // One factor odd, one even: only meaningful when the odd part
                // is declared relation-free.
                if (!p.odd_products_vanish) {
                    throw parse_error(
                        "a product of an odd generator with an even class requires "
                        "odd_products_vanish");
                }
                Slot odd = left.kind == Slot::Odd ? left : right;
                Slot even = left.kind == Slot::Odd ? right : left;
                if (!seen_mixed.insert({odd.index, even.index}).second) {
                    throw parse_error(
                        "duplicate product entry for an odd generator and an even class");
                }
                AlgebraElement value;
                for (const auto& [slot, coeff] : terms) {
                    value = value + AlgebraElement::monomial(slot_monomial(slot), coeff);
                }
                if (!value.is_zero()) {
                    p.odd_even_products[{odd.index, even.index}] = std::move(value);
                }
            }
        }
    }

    out.presentation = std::move(p);
    return out;
}

namespace {

std::string read_file(const std::string& path, const char* what) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error(std::string("cannot open ") + what + " '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

SpaceFile parse_space_file(const std::string& path) {
    return parse_space_text(read_file(path, "space file"));
}

namespace {

json generator_list_json(const std::vector<GeneratorSpec>& gens) {
    json arr = json::array();
    for (const auto& g : gens) {
        arr.push_back({{"name", g.name}, {"degree", g.degree}});
    }
    return arr;
}

std::string basis_label(const RingPresentation& p, const BasisElement& e) {
    if (e.is_unit()) return "1";
    return name_of(p, e);
}

}  // namespace

std::string space_file_text(const RingPresentation& p) {
    json j;
    j["name"] = p.name;
    if (!p.odd_generators.empty()) {
        j["odd_generators"] = generator_list_json(p.odd_generators);
    }
    if (!p.even.basis.empty()) {
        j["even_basis"] = generator_list_json(p.even.basis);
    }

    json products = json::array();
    int m = p.even.size();
    for (int i = 1; i <= m; ++i) {
        for (int k = i; k <= m; ++k) {
            const auto& combo = p.even.product(i, k);
            json result = json::array();
            for (int idx = 0; idx <= m; ++idx) {
                if (combo[idx] == 0) continue;
                result.push_back({{"basis", idx == 0 ? "1" : p.even.basis[idx - 1].name},
                                  {"coeff", rational_to_string(combo[idx])}});
            }
            if (result.empty()) continue;
            products.push_back({{"left", p.even.basis[i - 1].name},
                                {"right", p.even.basis[k - 1].name},
                                {"result", std::move(result)}});
        }
    }
    for (const auto& [key, value] : p.odd_even_products) {
        if (value.is_zero()) continue;
        json result = json::array();
        for (const auto& [mono, coeff] : value.terms()) {
            result.push_back({{"basis", basis_label(p, mono)},
                              {"coeff", rational_to_string(coeff)}});
        }
        products.push_back({{"left", p.odd_generators[key.first].name},
                            {"right", p.even.basis[key.second - 1].name},
                            {"result", std::move(result)}});
    }
    if (!products.empty()) {
        j["even_products"] = std::move(products);
    }
    if (p.odd_products_vanish) {
        j["odd_products_vanish"] = true;
    }
    return j.dump(2) + "\n";
}

std::string betti_file_text(const std::string& name, const std::vector<int>& betti) {
    json j;
    j["name"] = name;
    j["betti_only"] = betti;
    return j.dump(2) + "\n";
}

std::map<std::string, AlgebraElement> parse_map_text(const std::string& text,
                                                     const ModelPtr& model) {
    json j = parse_json(text, "map file");
    if (!j.is_object()) throw parse_error("map file must be a JSON object");
    reject_unknown_keys(j, {"images"}, "map file");
    if (!j.contains("images") || !j["images"].is_object()) {
        throw parse_error("map file needs an 'images' object");
    }

    const RingPresentation& p = model->presentation;
    std::map<std::string, AlgebraElement> images;
    for (const auto& item : j["images"].items()) {
        if (!item.value().is_array()) {
            throw parse_error("the image of '" + item.key() + "' must be an array of terms");
        }
        AlgebraElement image;
        for (const auto& term : item.value()) {
            if (!term.is_object()) throw parse_error("each image term must be an object");
            reject_unknown_keys(term, {"monomial", "even", "coeff"}, "an image term");
            Rational coeff = parse_rational(require_string(term, "coeff", "an image term"));

            std::uint64_t mask = 0;
            int sign = 1;
            if (term.contains("monomial")) {
                if (!term["monomial"].is_array()) {
                    throw parse_error("'monomial' must be an array of odd generator names");
                }
                for (const auto& entry : term["monomial"]) {
                    if (!entry.is_string()) {
                        throw parse_error("'monomial' must be an array of odd generator names");
                    }
                    std::string gen = entry.get<std::string>();
                    int idx = -1;
                    for (int i = 0; i < static_cast<int>(p.odd_generators.size()); ++i) {
                        if (p.odd_generators[i].name == gen) { idx = i; break; }
                    }
                    if (idx < 0) {
                        throw validation_error("'" + gen + "' is not an odd generator");
                    }
                    std::uint64_t bit = std::uint64_t{1} << idx;
                    if (mask & bit) {
                        throw parse_error("repeated generator '" + gen + "' in a monomial");
                    }
                    // Reordering the written factors into the canonical
                    // ascending order costs the sign of the permutation.
                    sign *= koszul_sign(mask, bit);
                    mask |= bit;
                }
            }

            std::uint32_t even_index = 0;
            if (term.contains("even")) {
                if (!term["even"].is_string()) {
                    throw parse_error("'even' must be the name of an even basis class");
                }
                std::string cls = term["even"].get<std::string>();
                for (int k = 0; k < static_cast<int>(p.even.basis.size()); ++k) {
                    if (p.even.basis[k].name == cls) { even_index = k + 1; break; }
                }
                if (even_index == 0) {
                    throw validation_error("'" + cls + "' is not an even basis class");
                }
            }

            BasisElement mono{mask, even_index};
            if (!model->basis.position.count(mono)) {
                throw validation_error("monomial '" + name_of(p, mono) +
                                       "' does not belong to the presentation");
            }
            image = image + AlgebraElement::monomial(mono, Rational(sign) * coeff);
        }
        images[item.key()] = std::move(image);
    }
    return images;
}

std::map<std::string, AlgebraElement> parse_map_file(const std::string& path,
                                                     const ModelPtr& model) {
    return parse_map_text(read_file(path, "map file"), model);
}

}  // namespace lefzeta
