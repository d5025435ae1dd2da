#include "lgm/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace lgm {

namespace {

using nlohmann::json;

json parse_object(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) throw InputError("expected a JSON object");
    return j;
}

std::vector<double> number_array(const json& j, const char* key, bool required) {
    if (!j.contains(key)) {
        if (required) throw InputError(std::string("missing field \"") + key + "\"");
        return {};
    }
    const auto& a = j.at(key);
    if (!a.is_array()) throw InputError(std::string("field \"") + key + "\" must be an array");
    std::vector<double> out;
    out.reserve(a.size());
    for (const auto& x : a) {
        if (!x.is_number()) throw InputError(std::string("field \"") + key + "\" must hold numbers");
        out.push_back(x.get<double>());
    }
    return out;
}

std::vector<Complex> complex_values(const json& j) {
    const auto re = number_array(j, "re", true);
    auto im = number_array(j, "im", false);
    if (im.empty()) im.assign(re.size(), 0.0);
    if (im.size() != re.size()) throw InputError("\"re\" and \"im\" differ in length");
    std::vector<Complex> v(re.size());
    for (std::size_t i = 0; i < re.size(); ++i) v[i] = {re[i], im[i]};
    return v;
}

double number_field(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number())
        throw InputError(std::string("missing numeric field \"") + key + "\"");
    return j.at(key).get<double>();
}

// Library validation errors on parsed data are input errors too.
template <class F>
auto guarded(F&& make) -> decltype(make()) {
    try {
        return make();
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

json complex_json(std::span<const Complex> v) {
    json re = json::array(), im = json::array();
    for (const auto& z : v) {
        re.push_back(z.real());
        im.push_back(z.imag());
    }
    return {{"re", re}, {"im", im}};
}

json number_or_string(double x) {
    if (std::isfinite(x)) return x;
    if (std::isnan(x)) return "nan";
    return x > 0 ? "inf" : "-inf";
}

}  // namespace

ComplexSeq parse_sequence(std::string_view text) {
    const json j = parse_object(text);
    return guarded([&] { return ComplexSeq(complex_values(j)); });
}

HeadedStepFunction parse_function(std::string_view text) {
    const json j = parse_object(text);
    auto bp = number_array(j, "breakpoints", true);
    auto vals = complex_values(j);
    if (!j.contains("head")) {
        return guarded([&] { return HeadedStepFunction(StepFunction(std::move(bp), std::move(vals))); });
    }
    const auto& h = j.at("head");
    if (!h.is_object()) throw InputError("\"head\" must be an object");
    if (bp.empty()) throw InputError("a headed function needs the head end as first breakpoint");
    if (vals.size() + 1 != bp.size())
        throw InputError("a headed function needs one value fewer than breakpoints");
    PowerHead head{number_field(h, "c"), number_field(h, "gamma"), bp.front()};
    bp.erase(bp.begin());
    return guarded([&] { return HeadedStepFunction(head, std::move(bp), std::move(vals)); });
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ComplexSeq load_sequence(const std::string& path) { return parse_sequence(read_text_file(path)); }

HeadedStepFunction load_function(const std::string& path) { return parse_function(read_text_file(path)); }

std::string to_json(const ComplexSeq& a) { return complex_json(a.values()).dump(); }

std::string to_json(const HeadedStepFunction& f) {
    json j = complex_json(f.values());
    json bp = json::array();
    if (f.head()) {
        j["head"] = {{"c", f.head()->coeff}, {"gamma", f.head()->exponent}};
        bp.push_back(f.head()->end);
    }
    for (double x : f.breakpoints()) bp.push_back(x);
    j["breakpoints"] = bp;
    return j.dump();
}

std::string to_json(const GMReport& r) {
    json j{{"class", std::string(to_string(r.class_tag))},
           {"constant", number_or_string(r.constant)},
           {"witness", number_or_string(r.witness)},
           {"limit", r.limit}};
    if (!std::isnan(r.witness_aux)) j["witness_aux"] = number_or_string(r.witness_aux);
    return j.dump();
}

std::string to_json(const Decomposition& d) {
    json j{{"t", d.t},
           {"N", d.N},
           {"sigma", d.sigma},
           {"cost", d.cost},
           {"k_value", d.k_value},
           {"ratio", d.ratio},
           {"b", complex_json(d.b.values())},
           {"d", complex_json(d.d.values())}};
    return j.dump();
}

std::string to_json(const VerificationReport& r) {
    json j{{"name", r.name},
           {"lhs", number_or_string(r.lhs)},
           {"rhs", number_or_string(r.rhs)},
           {"constant", number_or_string(r.constant)},
           {"ratio", number_or_string(r.ratio)},
           {"pass", r.pass}};
    return j.dump();
}

}  // namespace lgm
