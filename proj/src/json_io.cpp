#include "dcqft/json_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <initializer_list>
#include <limits>

namespace dcqft {

namespace {

void require_object(const Json& j, const char* what, std::initializer_list<const char*> required,
                    std::initializer_list<const char*> optional = {}) {
    if (!j.is_object()) throw InputError(std::string(what) + ": expected a JSON object");
    for (const char* key : required)
        if (!j.contains(key)) throw InputError(std::string(what) + ": missing key '" + key + "'");
    for (auto it = j.begin(); it != j.end(); ++it) {
        const bool known = std::any_of(required.begin(), required.end(), [&](const char* k) { return it.key() == k; }) ||
                           std::any_of(optional.begin(), optional.end(), [&](const char* k) { return it.key() == k; });
        if (!known) throw InputError(std::string(what) + ": unexpected key '" + it.key() + "'");
    }
}

double get_real(const Json& j, const char* key, const char* what) {
    const Json& v = j.at(key);
    if (!v.is_number()) throw InputError(std::string(what) + ": '" + key + "' must be a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) throw InputError(std::string(what) + ": '" + key + "' must be finite");
    return x;
}

std::int64_t as_int(const Json& v, const std::string& what) {
    if (v.is_number_integer()) return v.get<std::int64_t>();
    if (v.is_number_float()) {
        const double x = v.get<double>();
        if (std::isfinite(x) && x == std::floor(x) && std::fabs(x) < 9e15) return static_cast<std::int64_t>(x);
    }
    throw InputError(what + " must be an integer");
}

std::int64_t get_int(const Json& j, const char* key, const char* what) {
    return as_int(j.at(key), std::string(what) + ": '" + key + "'");
}

std::vector<double> get_real_array(const Json& j, const char* key, const char* what) {
    const Json& v = j.at(key);
    if (!v.is_array()) throw InputError(std::string(what) + ": '" + key + "' must be an array");
    std::vector<double> out;
    for (const auto& e : v) {
        if (!e.is_number()) throw InputError(std::string(what) + ": '" + key + "' must contain numbers");
        out.push_back(e.get<double>());
        if (!std::isfinite(out.back())) throw InputError(std::string(what) + ": non-finite entry in '" + key + "'");
    }
    return out;
}

IntVector get_int_array(const Json& j, const char* key, const char* what) {
    const Json& v = j.at(key);
    if (!v.is_array()) throw InputError(std::string(what) + ": '" + key + "' must be an array");
    IntVector out;
    for (const auto& e : v) out.push_back(as_int(e, std::string(what) + ": entries of '" + key + "'"));
    return out;
}

TorusVector to_torus(const std::vector<double>& xs) {
    TorusVector out;
    for (double x : xs) out.push_back(torus_from_real(x));
    return out;
}

ModeList modes_from_json(const Json& j, const char* what) {
    if (!j.is_array()) throw InputError(std::string(what) + ": 'modes' must be an array");
    ModeList modes;
    for (const auto& m : j) {
        require_object(m, "mode", {"k"}, {"a_plus", "a_minus", "b_plus", "b_minus"});
        ChiralMode c;
        const std::int64_t k = get_int(m, "k", "mode");
        if (k < 1 || k > std::numeric_limits<int>::max()) throw InputError("mode: 'k' must be a positive integer");
        c.k = static_cast<int>(k);
        if (m.contains("a_plus")) c.a_plus = get_real(m, "a_plus", "mode");
        if (m.contains("a_minus")) c.a_minus = get_real(m, "a_minus", "mode");
        if (m.contains("b_plus")) c.b_plus = get_real(m, "b_plus", "mode");
        if (m.contains("b_minus")) c.b_minus = get_real(m, "b_minus", "mode");
        modes.push_back(c);
    }
    try {
        return sorted_modes(std::move(modes));
    } catch (const std::invalid_argument& e) {
        throw InputError(std::string(what) + ": " + e.what());
    }
}

Json modes_to_json(const ModeList& modes) {
    Json arr = Json::array();
    for (const auto& m : modes)
        arr.push_back({{"k", m.k}, {"a_plus", m.a_plus}, {"a_minus", m.a_minus}, {"b_plus", m.b_plus},
                       {"b_minus", m.b_minus}});
    return arr;
}

int get_small_int(const Json& j, const char* key, const char* what, int lo) {
    const std::int64_t v = get_int(j, key, what);
    if (v < lo || v > 1000000) throw InputError(std::string(what) + ": '" + key + "' out of range");
    return static_cast<int>(v);
}

}  // namespace

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InputError("'" + path + "' is not valid JSON: " + e.what());
    }
}

FourierCharacter character_from_json(const Json& j) {
    require_object(j, "character", {"h0", "ht0", "n", "nt", "modes"});
    FourierCharacter h;
    h.h0 = torus_from_real(get_real(j, "h0", "character"));
    h.ht0 = torus_from_real(get_real(j, "ht0", "character"));
    h.n = get_int(j, "n", "character");
    h.nt = get_int(j, "nt", "character");
    h.modes = modes_from_json(j.at("modes"), "character");
    return h;
}

Json character_to_json(const FourierCharacter& h) {
    return {{"h0", h.h0.rep()}, {"ht0", h.ht0.rep()}, {"n", h.n}, {"nt", h.nt}, {"modes", modes_to_json(h.modes)}};
}

DynamicalDatum datum_from_json(const Json& j) {
    require_object(j, "dynamical datum", {"modes"});
    return DynamicalDatum{modes_from_json(j.at("modes"), "dynamical datum")};
}

Json datum_to_json(const DynamicalDatum& d) { return {{"modes", modes_to_json(d.modes)}}; }

TopologicalElement topological_from_json(const Json& j) {
    require_object(j, "topological element", {"k", "m", "u", "ut", "v", "vt"});
    const int k = get_small_int(j, "k", "topological element", 0);
    const int m = get_small_int(j, "m", "topological element", 0);
    TorusVector u = to_torus(get_real_array(j, "u", "topological element"));
    TorusVector ut = to_torus(get_real_array(j, "ut", "topological element"));
    IntVector v = get_int_array(j, "v", "topological element");
    IntVector vt = get_int_array(j, "vt", "topological element");
    if (u.size() != v.size() || ut.size() != vt.size())
        throw InputError("topological element: u/v and ut/vt lengths must match");
    try {
        TopologicalModel model(u.size(), ut.size(), k, m);
        return model.element(std::move(u), std::move(ut), std::move(v), std::move(vt));
    } catch (const std::invalid_argument& e) {
        throw InputError(std::string("topological element: ") + e.what());
    }
}

Json topological_to_json(const TopologicalElement& x) {
    Json u = Json::array(), ut = Json::array();
    for (auto a : x.u) u.push_back(a.rep());
    for (auto a : x.ut) ut.push_back(a.rep());
    return {{"k", x.grading.k}, {"m", x.grading.m}, {"u", u}, {"ut", ut}, {"v", x.v}, {"vt", x.vt}};
}

GnsVector gns_from_json(const Json& j) {
    if (!j.is_array()) throw InputError("GNS vector: expected an array of amplitudes");
    GnsVector out;
    for (const auto& e : j) {
        require_object(e, "GNS amplitude", {"v", "vt"}, {"re", "im"});
        const double re = e.contains("re") ? get_real(e, "re", "GNS amplitude") : 0.0;
        const double im = e.contains("im") ? get_real(e, "im", "GNS amplitude") : 0.0;
        out.add(LatticeKet{get_int_array(e, "v", "GNS amplitude"), get_int_array(e, "vt", "GNS amplitude")},
                Complex(re, im));
    }
    return out;
}

Json gns_to_json(const GnsVector& v) {
    Json arr = Json::array();
    for (const auto& [k, c] : v.amplitudes())
        arr.push_back({{"v", k.v}, {"vt", k.vt}, {"re", c.real()}, {"im", c.imag()}});
    return arr;
}

SpectrumInput spectrum_from_json(const Json& j) {
    require_object(j, "spectrum", {"m", "k", "modes"});
    SpectrumInput in;
    in.spectrum.m = get_small_int(j, "m", "spectrum", 1);
    in.spectrum.k = get_small_int(j, "k", "spectrum", 0);
    const Json& modes = j.at("modes");
    if (!modes.is_array()) throw InputError("spectrum: 'modes' must be an array");
    struct Slot {
        double lambda;
        SlotData data;
    };
    std::vector<Slot> slots;
    for (const auto& m : modes) {
        require_object(m, "spectrum mode", {"lambda"}, {"alpha", "alpha_tilde"});
        Slot s{get_real(m, "lambda", "spectrum mode"), {}};
        if (!(s.lambda > 0.0)) throw InputError("spectrum mode: 'lambda' must be positive");
        if (m.contains("alpha")) s.data.alpha = get_real(m, "alpha", "spectrum mode");
        if (m.contains("alpha_tilde")) s.data.alpha_tilde = get_real(m, "alpha_tilde", "spectrum mode");
        slots.push_back(s);
    }
    std::stable_sort(slots.begin(), slots.end(), [](const Slot& a, const Slot& b) { return a.lambda < b.lambda; });
    for (const auto& s : slots) {
        if (!in.spectrum.entries.empty() && in.spectrum.entries.back().lambda == s.lambda)
            ++in.spectrum.entries.back().multiplicity;
        else
            in.spectrum.entries.push_back({s.lambda, 1});
        in.data.slots.push_back(s.data);
    }
    if (in.spectrum.m < in.spectrum.k) throw InputError("spectrum: need k <= m");
    return in;
}

SplittingModel splitting_from_json(const Json& j) {
    require_object(j, "splitting model", {"n", "n_tilde", "k", "m", "case", "lifts"});
    SplittingModel model;
    model.n = static_cast<std::size_t>(get_small_int(j, "n", "splitting model", 0));
    model.n_tilde = static_cast<std::size_t>(get_small_int(j, "n_tilde", "splitting model", 0));
    model.k = get_small_int(j, "k", "splitting model", 0);
    model.m = get_small_int(j, "m", "splitting model", 0);
    const Json& kind = j.at("case");
    if (!kind.is_string()) throw InputError("splitting model: 'case' must be a string");
    if (kind == "general")
        model.kind = SplittingCase::general;
    else if (kind == "self_dual")
        model.kind = SplittingCase::self_dual;
    else
        throw InputError("splitting model: 'case' must be \"general\" or \"self_dual\"");
    const Json& rows = j.at("lifts");
    if (!rows.is_array()) throw InputError("splitting model: 'lifts' must be an array of rows");
    const std::size_t cols = model.kind == SplittingCase::general ? model.n_tilde : model.n;
    if (rows.size() != model.n) throw InputError("splitting model: 'lifts' must have n rows");
    model.lifts.resize(static_cast<Eigen::Index>(model.n), static_cast<Eigen::Index>(cols));
    for (std::size_t i = 0; i < model.n; ++i) {
        const Json& row = rows[i];
        if (!row.is_array() || row.size() != cols) throw InputError("splitting model: lift row has the wrong length");
        for (std::size_t c = 0; c < cols; ++c) {
            if (!row[c].is_number()) throw InputError("splitting model: lifts must be numbers");
            const double x = row[c].get<double>();
            if (!std::isfinite(x)) throw InputError("splitting model: lifts must be finite");
            model.lifts(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) = x;
        }
    }
    return model;
}

TestForm test_form_from_json(const Json& j) {
    require_object(j, "test form", {"components"});
    const Json& comps = j.at("components");
    if (!comps.is_array()) throw InputError("test form: 'components' must be an array");
    TestForm form;
    for (const auto& c : comps) {
        require_object(c, "test form component", {"s", "k", "t_grid", "samples_re"}, {"samples_im", "profile"});
        TestFormComponent tc;
        tc.s = get_small_int(c, "s", "test form component", 0);
        if (tc.s > 1) throw InputError("test form component: 's' must be 0 or 1");
        const std::int64_t k = get_int(c, "k", "test form component");
        if (std::llabs(k) > 100000) throw InputError("test form component: 'k' out of range");
        tc.k = static_cast<int>(k);
        require_object(c.at("t_grid"), "t_grid", {"t0", "dt"});
        tc.t0 = get_real(c.at("t_grid"), "t0", "t_grid");
        tc.dt = get_real(c.at("t_grid"), "dt", "t_grid");
        if (!(tc.dt > 0.0)) throw InputError("t_grid: 'dt' must be positive");
        const auto re = get_real_array(c, "samples_re", "test form component");
        const auto im = c.contains("samples_im") ? get_real_array(c, "samples_im", "test form component")
                                                 : std::vector<double>(re.size(), 0.0);
        if (im.size() != re.size()) throw InputError("test form component: samples_re/samples_im length mismatch");
        for (std::size_t i = 0; i < re.size(); ++i) tc.samples.emplace_back(re[i], im[i]);
        if (c.contains("profile")) {
            const Json& p = c.at("profile");
            if (p == "exp")
                tc.basis = TestFormComponent::Basis::exp;
            else if (p == "cos")
                tc.basis = TestFormComponent::Basis::cos;
            else if (p == "sin")
                tc.basis = TestFormComponent::Basis::sin;
            else
                throw InputError("test form component: 'profile' must be exp, cos or sin");
        }
        form.components.push_back(std::move(tc));
    }
    return form;
}

GnsScript gns_script_from_json(const Json& j) {
    require_object(j, "gns script", {"k", "m", "n", "n_tilde", "initial", "ops"});
    GnsScript script;
    script.k = get_small_int(j, "k", "gns script", 0);
    script.m = get_small_int(j, "m", "gns script", 0);
    script.n = static_cast<std::size_t>(get_small_int(j, "n", "gns script", 0));
    script.n_tilde = static_cast<std::size_t>(get_small_int(j, "n_tilde", "gns script", 0));
    if (script.m < script.k) throw InputError("gns script: need k <= m");
    script.initial = gns_from_json(j.at("initial"));
    for (const auto& [ket, c] : script.initial.amplitudes())
        if (ket.v.size() != script.n || ket.vt.size() != script.n_tilde)
            throw InputError("gns script: initial ket has the wrong rank");
    const Json& ops = j.at("ops");
    if (!ops.is_array()) throw InputError("gns script: 'ops' must be an array");
    for (const auto& o : ops) {
        if (!o.is_object() || !o.contains("op") || !o.at("op").is_string())
            throw InputError("gns op: expected an object with a string 'op'");
        const std::string name = o.at("op").get<std::string>();
        GnsOp op;
        if (name == "U") {
            require_object(o, "gns op U", {"op"});
            op.kind = GnsOp::Kind::duality;
        } else if (name == "Pi" || name == "Pi_tilde") {
            require_object(o, "gns op Pi", {"op", "index"});
            op.kind = name == "Pi" ? GnsOp::Kind::momentum : GnsOp::Kind::momentum_tilde;
            op.index = static_cast<std::size_t>(get_small_int(o, "index", "gns op Pi", 0));
            if (op.index >= (name == "Pi" ? script.n : script.n_tilde))
                throw InputError("gns op " + name + ": index out of range");
        } else if (name == "R" || name == "R_tilde") {
            require_object(o, "gns op R", {"op", "u"});
            op.kind = name == "R" ? GnsOp::Kind::rotation : GnsOp::Kind::rotation_tilde;
            op.u = to_torus(get_real_array(o, "u", "gns op R"));
            if (op.u.size() != (name == "R" ? script.n : script.n_tilde))
                throw InputError("gns op " + name + ": 'u' has the wrong length");
        } else if (name == "T" || name == "T_tilde") {
            require_object(o, "gns op T", {"op", "v"});
            op.kind = name == "T" ? GnsOp::Kind::translation : GnsOp::Kind::translation_tilde;
            op.v = get_int_array(o, "v", "gns op T");
            if (op.v.size() != (name == "T" ? script.n : script.n_tilde))
                throw InputError("gns op " + name + ": 'v' has the wrong length");
        } else {
            throw InputError("gns op: unknown operator '" + name + "'");
        }
        script.ops.push_back(std::move(op));
    }
    return script;
}

}  // namespace dcqft
