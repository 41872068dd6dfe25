#include "weyl/format.hpp"

#include <json.hpp>

#include <sstream>
#include <vector>

namespace weyl {

namespace {

using Json = nlohmann::ordered_json;

std::string atom_label(const Generator& g) {
    switch (g.atom_class) {
        case AtomClass::State: return g.name;
        case AtomClass::DqState: return "dq(" + g.name + ")";
        case AtomClass::DpState: return "dp(" + g.name + ")";
    }
    return g.name;
}

std::string letter_label(const Generator& g) {
    if (g.kind == Generator::Kind::Q) return "q";
    if (g.kind == Generator::Kind::P) return "p";
    return atom_label(g);
}

// Run-length encode a word's letters: (label, exponent) pairs.
std::vector<std::pair<std::string, long>> word_runs(const Word& w) {
    std::vector<std::pair<std::string, long>> runs;
    for (const auto& g : w.letters) {
        std::string label = letter_label(g);
        if (!runs.empty() && runs.back().first == label)
            runs.back().second += 1;
        else
            runs.emplace_back(std::move(label), 1);
    }
    return runs;
}

std::string power_str(const std::string& label, long e) {
    if (e == 1) return label;
    return label + "^" + std::to_string(e);
}

std::string term_text(const Rational& coeff_abs, long h_exp, const Word& w) {
    std::vector<std::string> parts;
    bool unit_coeff = (coeff_abs == 1);
    if (!unit_coeff || (w.empty() && h_exp == 0))
        parts.push_back(rational_to_string(coeff_abs));
    for (const auto& [label, e] : word_runs(w)) parts.push_back(power_str(label, e));
    if (h_exp != 0) parts.push_back(power_str("h", h_exp));
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += " ";
        out += parts[i];
    }
    return out;
}

std::string poly_text(const OperatorPoly& a) {
    if (a.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [key, c] : a.terms()) {
        bool negative = sgn(c) < 0;
        Rational mag = negative ? Rational(-c) : c;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        out += term_text(mag, key.h_exp, key.word);
        first = false;
    }
    return out;
}

Json poly_json(const OperatorPoly& a) {
    Json terms = Json::array();
    for (const auto& [key, c] : a.terms()) {
        Json t;
        t["coeff"] = rational_to_string(c);
        t["h"] = key.h_exp;
        Json word = Json::array();
        for (const auto& [label, e] : word_runs(key.word))
            word.push_back(Json{{"g", label}, {"e", e}});
        t["word"] = std::move(word);
        terms.push_back(std::move(t));
    }
    return Json{{"terms", std::move(terms)}};
}

std::string classical_text(const ClassicalPoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [key, c] : f.terms()) {
        bool negative = sgn(c) < 0;
        Rational mag = negative ? Rational(-c) : c;
        std::vector<std::string> parts;
        bool bare = (key[0] == 0 && key[1] == 0 && key[2] == 0);
        if (mag != 1 || bare) parts.push_back(rational_to_string(mag));
        if (key[0] != 0) parts.push_back(power_str("q", key[0]));
        if (key[1] != 0) parts.push_back(power_str("p", key[1]));
        if (key[2] != 0) parts.push_back(power_str("h", key[2]));
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) out += " ";
            out += parts[i];
        }
        first = false;
    }
    return out;
}

Json classical_json(const ClassicalPoly& f) {
    Json terms = Json::array();
    for (const auto& [key, c] : f.terms()) {
        terms.push_back(Json{{"coeff", rational_to_string(c)},
                             {"q", key[0]},
                             {"p", key[1]},
                             {"h", key[2]}});
    }
    return Json{{"terms", std::move(terms)}};
}

Generator generator_from_label(const std::string& label) {
    if (label == "q") return Generator::q();
    if (label == "p") return Generator::p();
    auto inner = [&](std::size_t prefix) {
        return label.substr(prefix, label.size() - prefix - 1);
    };
    if (label.rfind("dq(", 0) == 0 && label.back() == ')')
        return Generator::atom(AtomClass::DqState, inner(3));
    if (label.rfind("dp(", 0) == 0 && label.back() == ')')
        return Generator::atom(AtomClass::DpState, inner(3));
    return Generator::atom(AtomClass::State, label);
}

}  // namespace

std::string format(const OperatorPoly& a, FormatMode mode) {
    if (mode == FormatMode::Text) return poly_text(a);
    return poly_json(a).dump();
}

std::string format(const ClassicalPoly& f, FormatMode mode) {
    if (mode == FormatMode::Text) return classical_text(f);
    return classical_json(f).dump();
}

OperatorPoly poly_from_json(const std::string& text) {
    Json doc = Json::parse(text);
    std::vector<Term> raw;
    for (const auto& t : doc.at("terms")) {
        Rational coeff(t.at("coeff").get<std::string>(), 10);
        coeff.canonicalize();
        Word w;
        for (const auto& entry : t.at("word")) {
            Generator g = generator_from_label(entry.at("g").get<std::string>());
            long e = entry.at("e").get<long>();
            for (long i = 0; i < e; ++i) w.letters.push_back(g);
        }
        raw.emplace_back(std::move(coeff), t.at("h").get<long>(), std::move(w));
    }
    return normalize(raw);
}

}  // namespace weyl
