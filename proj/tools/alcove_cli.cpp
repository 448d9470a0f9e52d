// Command-line front end: one verb per library computation, table or JSON
// output, @file indirection for structured arguments.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "alcove/apartment.hpp"
#include "alcove/concave.hpp"
#include "alcove/errors.hpp"
#include "alcove/fibre.hpp"
#include "alcove/json_io.hpp"
#include "alcove/rootsystem.hpp"
#include "alcove/series.hpp"

using namespace alcove;
using nlohmann::json;

namespace {

std::string render_table(const std::vector<std::vector<std::string>>& rows) {
    std::vector<size_t> width;
    for (const auto& row : rows) {
        if (row.size() > width.size()) width.resize(row.size(), 0);
        for (size_t c = 0; c < row.size(); ++c)
            width[c] = std::max(width[c], row[c].size());
    }
    std::ostringstream out;
    for (const auto& row : rows) {
        for (size_t c = 0; c < row.size(); ++c) {
            if (c) out << "  ";
            out << row[c];
            if (c + 1 < row.size())
                out << std::string(width[c] - row[c].size(), ' ');
        }
        out << '\n';
    }
    return out.str();
}

std::string root_str(const Root& r) { return json(r).dump(); }

json load_json(const std::string& arg) {
    std::string text = arg;
    if (!arg.empty() && arg[0] == '@') {
        std::ifstream in(arg.substr(1));
        if (!in) throw ParseError("cannot open " + arg.substr(1));
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad JSON: ") + e.what());
    }
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string item;
    while (std::getline(in, item, sep)) out.push_back(item);
    return out;
}

ApartmentPoint parse_point(const std::string& s, DynkinType t) {
    ApartmentPoint p{t, {}};
    for (const auto& c : split(s, ',')) p.coords.push_back(parse_rat(c));
    p.validate();
    return p;
}

BoundedSet parse_set(const std::string& s, DynkinType t) {
    if (!s.empty() && (s[0] == '@' || s[0] == '[')) return set_from_json(load_json(s), t);
    BoundedSet omega;
    for (const auto& part : split(s, ';')) omega.points.push_back(parse_point(part, t));
    omega.validate();
    return omega;
}

std::vector<int> parse_ints(const std::string& s) {
    std::vector<int> out;
    for (const auto& part : split(s, ',')) {
        try {
            size_t used = 0;
            out.push_back(std::stoi(part, &used));
            if (used != part.size()) throw ParseError("bad integer '" + part + "'");
        } catch (const std::logic_error&) {
            throw ParseError("bad integer '" + part + "'");
        }
    }
    return out;
}

ConcaveMap load_concave(const std::string& arg, DynkinType t) {
    ConcaveMap f = concave_from_json(load_json(arg));
    if (f.dynkin != t)
        throw ParseError("map type " + f.dynkin.str() + " does not match " + t.str());
    return f;
}

ConcaveTuple load_tuple(const std::string& arg, DynkinType t) {
    ConcaveTuple fs = tuple_from_json(load_json(arg));
    if (fs.entries.front().dynkin != t)
        throw ParseError("tuple type does not match " + t.str());
    return fs;
}

void emit_map(const ConcaveMap& f, bool as_json) {
    if (as_json) {
        std::cout << concave_to_json(f).dump(2) << '\n';
        return;
    }
    const RootSystem& rs = RootSystem::get(f.dynkin);
    std::vector<std::vector<std::string>> rows{{"root", "value"}};
    for (size_t i = 0; i < rs.roots().size(); ++i)
        rows.push_back({root_str(rs.roots()[i]), format_rat(f.values[i])});
    std::cout << render_table(rows);
}

void emit_point(const ApartmentPoint& p, bool as_json) {
    if (as_json) {
        std::cout << point_to_json(p).dump() << '\n';
        return;
    }
    std::vector<std::string> row;
    for (const auto& c : p.coords) row.push_back(format_rat(c));
    std::cout << render_table({row});
}

void emit_fibre(const FibreRootDatum& f, bool as_json) {
    if (as_json) {
        std::cout << fibre_to_json(f).dump(2) << '\n';
        return;
    }
    std::ostringstream out;
    for (size_t i = 0; i < f.roots.size(); ++i) {
        if (i) out << ' ';
        out << root_str(f.roots[i]);
    }
    std::cout << out.str() << '\n';
}

void emit_matrix(const TruncatedLaurentMatrix& m, bool as_json) {
    if (as_json) {
        std::cout << matrix_to_json(m).dump(2) << '\n';
        return;
    }
    std::vector<std::vector<std::string>> rows;
    for (const auto& row : m.entries) {
        std::vector<std::string> cells;
        for (const auto& s : row) {
            std::ostringstream cell;
            if (s.terms.empty()) cell << "0";
            bool first = true;
            for (const auto& [e, c] : s.terms) {
                if (!first) cell << " + ";
                first = false;
                cell << format_rat(c) << "*z^" << json(e).dump();
            }
            cells.push_back(cell.str());
        }
        rows.push_back(cells);
    }
    std::cout << render_table(rows);
}

struct Options {
    std::string format = "table";
    bool json() const { return format == "json"; }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact alcove/concave-function/valuation-pattern calculator"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"table", "json"}));

    std::string type_arg, theta_arg, omega_arg, concave_arg, tuple_arg;
    std::string subset_arg, scaling_arg = "vertex", depth_arg = "0";
    std::string matrix_arg, lhs_arg, rhs_arg, pattern_arg, tau_arg;
    std::uint64_t seed = 0;
    int gens = 4, cap = 4, pole_cap = 4, nvars = 2, order = 2;

    auto add_type = [&](CLI::App* cmd) {
        cmd->add_option("type", type_arg, "Dynkin type, e.g. G2")->required();
    };

    auto* c_roots = app.add_subcommand("roots", "list roots in canonical order");
    add_type(c_roots);
    auto* c_constants = app.add_subcommand("constants", "group constants");
    add_type(c_constants);
    auto* c_mvals = app.add_subcommand("mvals", "-floor(r(theta)) for every root");
    add_type(c_mvals);
    c_mvals->add_option("--theta", theta_arg)->required();
    auto* c_msets = app.add_subcommand("msets", "-floor(min r over a vertex set)");
    add_type(c_msets);
    c_msets->add_option("--omega", omega_arg)->required();
    auto* c_vertices = app.add_subcommand("vertices", "nonzero alcove vertices");
    add_type(c_vertices);
    auto* c_bary = app.add_subcommand("barycenter", "facet barycenter");
    add_type(c_bary);
    c_bary->add_option("--subset", subset_arg, "affine node indices, 0 = origin")->required();
    auto* c_reduce = app.add_subcommand("reduce", "affine-Weyl alcove representative");
    add_type(c_reduce);
    c_reduce->add_option("--theta", theta_arg)->required();
    auto* c_check = app.add_subcommand("concave-check", "verify concavity");
    add_type(c_check);
    c_check->add_option("--concave", concave_arg)->required();
    auto* c_classify = app.add_subcommand("classify", "type I/II/III with witness");
    add_type(c_classify);
    c_classify->add_option("--concave", concave_arg)->required();
    auto* c_fprime = app.add_subcommand("fprime", "regularized concave function");
    add_type(c_fprime);
    c_fprime->add_option("--concave", concave_arg)->required();
    auto* c_mp = app.add_subcommand("moyprasad", "depth-filtration data");
    add_type(c_mp);
    c_mp->add_option("--theta", theta_arg)->required();
    c_mp->add_option("--depth", depth_arg)->required();
    auto* c_pattern = app.add_subcommand("pattern", "valuation pattern of a tuple");
    add_type(c_pattern);
    c_pattern->add_option("--tuple", tuple_arg)->required();
    auto* c_member = app.add_subcommand("member", "pattern membership");
    c_member->add_option("--matrix", matrix_arg)->required();
    c_member->add_option("--pattern", pattern_arg)->required();
    auto* c_mul = app.add_subcommand("multiply", "truncated matrix product");
    c_mul->add_option("--lhs", lhs_arg)->required();
    c_mul->add_option("--rhs", rhs_arg)->required();
    auto* c_sample = app.add_subcommand("sample", "seeded pattern member");
    c_sample->add_option("--pattern", pattern_arg)->required();
    c_sample->add_option("--seed", seed)->required();
    c_sample->add_option("--gens", gens);
    c_sample->add_option("--cap", cap);
    c_sample->add_option("--pole", pole_cap);
    auto* c_diag = app.add_subcommand("diag", "set all variables equal");
    c_diag->add_option("--matrix", matrix_arg)->required();
    auto* c_embed = app.add_subcommand("embed", "substitute t = z_1...z_n");
    c_embed->add_option("--matrix", matrix_arg)->required();
    c_embed->add_option("--nvars", nvars)->required();
    auto* c_fibre = app.add_subcommand("fibre", "closed-fibre root set of a map");
    add_type(c_fibre);
    c_fibre->add_option("--concave", concave_arg)->required();
    auto* c_phi = app.add_subcommand("phitheta", "roots integral on theta");
    add_type(c_phi);
    c_phi->add_option("--theta", theta_arg)->required();
    auto* c_facet = app.add_subcommand("facet", "facet fibre under a scaling");
    add_type(c_facet);
    c_facet->add_option("--scaling", scaling_arg)
        ->check(CLI::IsMember({"vertex", "shrunk", "lattice"}));
    c_facet->add_option("--subset", subset_arg, "simple indices, 1-based")->required();
    auto* c_subdiag = app.add_subcommand("subdiag", "fibre of a tuple sum");
    add_type(c_subdiag);
    c_subdiag->add_option("--tuple", tuple_arg)->required();
    c_subdiag->add_option("--subset", subset_arg)->required();
    auto* c_mckay = app.add_subcommand("mckay", "cyclic degeneration data");
    add_type(c_mckay);
    c_mckay->add_option("--d", order)->required();
    c_mckay->add_option("--tau", tau_arg)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        auto type = [&] { return DynkinType::parse(type_arg); };

        if (*c_roots) {
            const RootSystem& rs = RootSystem::get(type());
            if (opt.json()) {
                json arr = json::array();
                for (const auto& r : rs.roots()) arr.push_back(r);
                std::cout << arr.dump() << '\n';
            } else {
                std::vector<std::vector<std::string>> rows{{"root", "height"}};
                for (const auto& r : rs.roots())
                    rows.push_back({root_str(r), std::to_string(height(r))});
                std::cout << render_table(rows);
            }
        } else if (*c_constants) {
            GroupConstants gc = group_constants(type());
            if (opt.json()) {
                std::cout << json{{"coxeter", gc.coxeter},
                                  {"mixed_char_bound", gc.mixed_char_bound},
                                  {"min_faithful_dim", gc.min_faithful_dim}}
                                 .dump(2)
                          << '\n';
            } else {
                std::cout << render_table({{"coxeter", std::to_string(gc.coxeter)},
                                           {"mixed_char_bound", std::to_string(gc.mixed_char_bound)},
                                           {"min_faithful_dim", std::to_string(gc.min_faithful_dim)}});
            }
        } else if (*c_mvals) {
            emit_map(from_point(parse_point(theta_arg, type())), opt.json());
        } else if (*c_msets) {
            emit_map(from_set(parse_set(omega_arg, type())), opt.json());
        } else if (*c_vertices) {
            auto verts = alcove_vertices(type());
            if (opt.json()) {
                json arr = json::array();
                for (const auto& v : verts) arr.push_back(point_to_json(v));
                std::cout << arr.dump() << '\n';
            } else {
                std::vector<std::vector<std::string>> rows;
                for (const auto& v : verts) {
                    std::vector<std::string> row;
                    for (const auto& c : v.coords) row.push_back(format_rat(c));
                    rows.push_back(row);
                }
                std::cout << render_table(rows);
            }
        } else if (*c_bary) {
            emit_point(barycenter(type(), parse_ints(subset_arg)), opt.json());
        } else if (*c_reduce) {
            emit_point(alcove_reduce(parse_point(theta_arg, type())), opt.json());
        } else if (*c_check) {
            ConcavityCheck c = is_concave(load_concave(concave_arg, type()));
            if (opt.json()) {
                json out{{"concave", c.ok}};
                if (!c.ok) {
                    json v = json::array();
                    for (const auto& r : c.violation) v.push_back(r);
                    out["violation"] = v;
                }
                std::cout << out.dump(2) << '\n';
            } else if (c.ok) {
                std::cout << "concave\n";
            } else {
                std::cout << "not concave, violation:";
                for (const auto& r : c.violation) std::cout << ' ' << root_str(r);
                std::cout << '\n';
            }
        } else if (*c_classify) {
            TypeWitness w = classify(load_concave(concave_arg, type()));
            if (opt.json()) {
                std::cout << witness_to_json(w).dump(2) << '\n';
            } else if (w.type == ConcaveType::I) {
                std::cout << "TypeI theta=" << point_to_json(*w.theta).dump() << '\n';
            } else if (w.type == ConcaveType::II) {
                std::cout << "TypeII omega=" << set_to_json(*w.omega).dump() << '\n';
            } else {
                std::cout << "TypeIII certificate=" << root_str(*w.certificate) << '\n';
            }
        } else if (*c_fprime) {
            emit_map(regularize(load_concave(concave_arg, type())), opt.json());
        } else if (*c_mp) {
            MoyPrasadDatum d = moy_prasad(parse_point(theta_arg, type()), parse_rat(depth_arg));
            if (opt.json()) {
                std::cout << moyprasad_to_json(d).dump(2) << '\n';
            } else {
                std::cout << "torus_level " << d.torus_level << '\n';
                emit_map(d.root_values, false);
            }
        } else if (*c_pattern) {
            ValuationPattern p = pattern(load_tuple(tuple_arg, type()));
            if (opt.json()) {
                std::cout << pattern_to_json(p).dump(2) << '\n';
            } else {
                std::vector<std::vector<std::string>> rows;
                for (int i = 0; i < p.m; ++i) {
                    std::vector<std::string> row;
                    for (int j = 0; j < p.m; ++j)
                        row.push_back(i == j ? std::string("*") : json(p.bounds[i][j]).dump());
                    rows.push_back(row);
                }
                std::cout << render_table(rows);
            }
        } else if (*c_member) {
            bool ok = is_member(matrix_from_json(load_json(matrix_arg)),
                                pattern_from_json(load_json(pattern_arg)));
            std::cout << (ok ? "true" : "false") << '\n';
        } else if (*c_mul) {
            emit_matrix(multiply(matrix_from_json(load_json(lhs_arg)),
                                 matrix_from_json(load_json(rhs_arg))),
                        opt.json());
        } else if (*c_sample) {
            emit_matrix(sample_member(pattern_from_json(load_json(pattern_arg)), seed,
                                      cap, pole_cap, gens),
                        opt.json());
        } else if (*c_diag) {
            emit_matrix(specialize_diag(matrix_from_json(load_json(matrix_arg))), opt.json());
        } else if (*c_embed) {
            emit_matrix(embed_uniformizer(matrix_from_json(load_json(matrix_arg)), nvars),
                        opt.json());
        } else if (*c_fibre) {
            emit_fibre(fibre_roots(load_concave(concave_arg, type())), opt.json());
        } else if (*c_phi) {
            emit_fibre(phi_theta(parse_point(theta_arg, type())), opt.json());
        } else if (*c_facet) {
            FacetScaling sc = scaling_arg == "vertex"   ? FacetScaling::Vertex
                              : scaling_arg == "shrunk" ? FacetScaling::Shrunk
                                                        : FacetScaling::Lattice;
            emit_fibre(facet_fibre(type(), sc, parse_ints(subset_arg)), opt.json());
        } else if (*c_subdiag) {
            emit_fibre(subdiagonal_fibre(load_tuple(tuple_arg, type()), parse_ints(subset_arg)),
                       opt.json());
        } else if (*c_mckay) {
            McKayData m = mckay_ad(order, parse_ints(tau_arg), type());
            std::cout << mckay_to_json(m).dump(2) << '\n';
        }
        return 0;
    } catch (const ParseError& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        std::cerr << e.what() << '\n';  // message is prefixed with the error name
        return 1;
    }
}
