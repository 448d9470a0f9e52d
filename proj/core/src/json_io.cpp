#include "alcove/json_io.hpp"

#include "alcove/errors.hpp"

namespace alcove {

using nlohmann::json;

namespace {

std::string root_key(const Root& r) { return json(r).dump(); }

// Runs a JSON reader, converting library exceptions into ParseError.
template <typename F>
auto guarded(const char* what, F&& f) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw ParseError(std::string(what) + ": " + e.what());
    }
}

}  // namespace

json concave_to_json(const ConcaveMap& f) {
    f.validate();
    const RootSystem& rs = RootSystem::get(f.dynkin);
    json values = json::object();
    for (size_t i = 0; i < rs.roots().size(); ++i)
        values[root_key(rs.roots()[i])] = format_rat(f.values[i]);
    return json{{"type", f.dynkin.str()}, {"zero", format_rat(f.zero)}, {"values", values}};
}

ConcaveMap concave_from_json(const json& j) {
    return guarded("concave map", [&] {
        DynkinType t = DynkinType::parse(j.at("type").get<std::string>());
        const RootSystem& rs = RootSystem::get(t);
        ConcaveMap f = zero_map(t);
        f.zero = parse_rat(j.at("zero").get<std::string>());
        const json& values = j.at("values");
        for (size_t i = 0; i < rs.roots().size(); ++i) {
            const std::string key = root_key(rs.roots()[i]);
            if (!values.contains(key))
                throw ParseError("missing root value " + key);
            f.values[i] = parse_rat(values.at(key).get<std::string>());
        }
        return f;
    });
}

json tuple_to_json(const ConcaveTuple& fs) {
    json arr = json::array();
    for (const auto& f : fs.entries) arr.push_back(concave_to_json(f));
    return arr;
}

ConcaveTuple tuple_from_json(const json& j) {
    return guarded("tuple", [&] {
        if (!j.is_array()) throw ParseError("tuple must be an array");
        ConcaveTuple fs;
        for (const auto& e : j) fs.entries.push_back(concave_from_json(e));
        fs.validate();
        return fs;
    });
}

json point_to_json(const ApartmentPoint& p) {
    json arr = json::array();
    for (const auto& c : p.coords) arr.push_back(format_rat(c));
    return arr;
}

ApartmentPoint point_from_json(const json& j, DynkinType dynkin) {
    return guarded("point", [&] {
        ApartmentPoint p{dynkin, {}};
        for (const auto& c : j) p.coords.push_back(parse_rat(c.get<std::string>()));
        p.validate();
        return p;
    });
}

json set_to_json(const BoundedSet& s) {
    json arr = json::array();
    for (const auto& p : s.points) arr.push_back(point_to_json(p));
    return arr;
}

BoundedSet set_from_json(const json& j, DynkinType dynkin) {
    return guarded("bounded set", [&] {
        BoundedSet s;
        for (const auto& p : j) s.points.push_back(point_from_json(p, dynkin));
        s.validate();
        return s;
    });
}

json matrix_to_json(const TruncatedLaurentMatrix& m) {
    json rows = json::array();
    for (const auto& row : m.entries) {
        json jrow = json::array();
        for (const auto& s : row) {
            json terms = json::array();
            for (const auto& [e, c] : s.terms)
                terms.push_back(json{{"exp", e}, {"coef", format_rat(c)}});
            jrow.push_back(terms);
        }
        rows.push_back(jrow);
    }
    return json{{"m", m.m},
                {"nvars", m.nvars()},
                {"cap", m.cap()},
                {"pole_cap", m.pole_cap()},
                {"entries", rows}};
}

TruncatedLaurentMatrix matrix_from_json(const json& j) {
    return guarded("matrix", [&] {
        int m = j.at("m").get<int>();
        int nvars = j.at("nvars").get<int>();
        int cap = j.at("cap").get<int>();
        int pole_cap = j.at("pole_cap").get<int>();
        if (m < 1 || nvars < 1 || cap < 1 || pole_cap < 0)
            throw ParseError("bad matrix shape");
        TruncatedLaurentMatrix out;
        out.m = m;
        out.entries.assign(m, std::vector<TruncatedSeries>(
                                  m, TruncatedSeries::zero(nvars, cap, pole_cap)));
        const json& rows = j.at("entries");
        if (static_cast<int>(rows.size()) != m) throw ParseError("row count != m");
        for (int i = 0; i < m; ++i) {
            if (static_cast<int>(rows[i].size()) != m)
                throw ParseError("column count != m");
            for (int k = 0; k < m; ++k) {
                for (const auto& term : rows[i][k]) {
                    std::vector<int> e = term.at("exp").get<std::vector<int>>();
                    if (static_cast<int>(e.size()) != nvars)
                        throw ParseError("exponent arity != nvars");
                    out.entries[i][k].add_term(
                        e, parse_rat(term.at("coef").get<std::string>()));
                }
            }
        }
        return out;
    });
}

json pattern_to_json(const ValuationPattern& p) {
    json bounds = json::array();
    for (int i = 0; i < p.m; ++i) {
        json row = json::array();
        for (int k = 0; k < p.m; ++k)
            row.push_back(i == k ? json(nullptr) : json(p.bounds[i][k]));
        bounds.push_back(row);
    }
    return json{{"m", p.m},
                {"nvars", p.nvars},
                {"diag_unit_level", p.diag_unit_level},
                {"bounds", bounds}};
}

ValuationPattern pattern_from_json(const json& j) {
    return guarded("pattern", [&] {
        ValuationPattern p;
        p.m = j.at("m").get<int>();
        p.nvars = j.at("nvars").get<int>();
        p.diag_unit_level = j.at("diag_unit_level").get<int>();
        if (p.m < 1 || p.nvars < 1 || p.diag_unit_level < 0)
            throw ParseError("bad pattern shape");
        p.bounds.assign(p.m, std::vector<std::vector<int>>(
                                 p.m, std::vector<int>(p.nvars, 0)));
        const json& bounds = j.at("bounds");
        for (int i = 0; i < p.m; ++i) {
            for (int k = 0; k < p.m; ++k) {
                if (i == k) continue;
                std::vector<int> v = bounds.at(i).at(k).get<std::vector<int>>();
                if (static_cast<int>(v.size()) != p.nvars)
                    throw ParseError("bound arity != nvars");
                p.bounds[i][k] = std::move(v);
            }
        }
        return p;
    });
}

json fibre_to_json(const FibreRootDatum& f) {
    json arr = json::array();
    for (const auto& r : f.roots) arr.push_back(r);
    return json{{"type", f.dynkin.str()}, {"roots", arr}};
}

json mckay_to_json(const McKayData& m) {
    json comps = json::array();
    for (const auto& c : m.components)
        comps.push_back(json{{"tau_s", c.tau_s}, {"theta_s", point_to_json(c.theta_s)}});
    json nodes = json::array();
    for (size_t s = 0; s < m.node_functions.size(); ++s)
        nodes.push_back(json{{"function", concave_to_json(m.node_functions[s])},
                             {"fibre", fibre_to_json(m.node_fibres[s])}});
    return json{{"d", m.d},
                {"tau", m.tau},
                {"tau_bar", m.tau_bar},
                {"components", comps},
                {"nodes", nodes},
                {"theta_reduction", "per-component"}};
}

json witness_to_json(const TypeWitness& w) {
    switch (w.type) {
        case ConcaveType::I:
            return json{{"type", "I"}, {"theta", point_to_json(*w.theta)}};
        case ConcaveType::II:
            return json{{"type", "II"}, {"omega", set_to_json(*w.omega)}};
        default:
            return json{{"type", "III"}, {"certificate", *w.certificate}};
    }
}

json moyprasad_to_json(const MoyPrasadDatum& d) {
    return json{{"theta", point_to_json(d.theta)},
                {"depth", format_rat(d.depth)},
                {"torus_level", d.torus_level.convert_to<long>()},
                {"root_values", concave_to_json(d.root_values)}};
}

}  // namespace alcove
