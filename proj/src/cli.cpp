#include "ktz/cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ktz/enumerate.hpp"
#include "ktz/extremal.hpp"
#include "ktz/io.hpp"
#include "ktz/ktree.hpp"

namespace ktz::cli {

using nlohmann::ordered_json;

std::string format_c(double c) {
    if (std::floor(c) == c && std::fabs(c) < 1e15) return std::to_string(static_cast<long long>(c));
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, c);
    return std::string(buf, res.ptr);
}

namespace {

ordered_json c_json(double c) {
    if (std::floor(c) == c && std::fabs(c) < 1e15) return static_cast<long long>(c);
    return c;
}

std::string fixed10(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10f", x);
    return buf;
}

std::string value_text(const IndexValue& v) {
    return v.exact ? v.decimal() : "10^" + fixed10(v.log10());
}

std::string join(const VertexSet& s, char sep = ' ') {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(s[i]);
    }
    return out;
}

std::string star_name(int k, int n) { return "S_{" + std::to_string(k) + "," + std::to_string(n - k) + "}"; }
std::string path_name(int k, int n) { return "P_" + std::to_string(n) + "^" + std::to_string(k); }

void require_kn(const CommandRequest& req) {
    if (req.k < 1) throw UsageError(req.subcommand + ": -k must be a positive integer");
    if (req.n < req.k) throw UsageError(req.subcommand + ": -n must be at least k");
}

void require_c(const CommandRequest& req) {
    if (req.c.empty()) throw UsageError(req.subcommand + ": at least one -c value is required");
    for (double c : req.c) {
        if (!(c > 0) || !std::isfinite(c)) throw UsageError(req.subcommand + ": c must be positive, got " + format_c(c));
    }
}

KTree generated(const CommandRequest& req) {
    require_kn(req);
    if (req.kind == "kpath") return gen_kpath(req.k, req.n);
    if (req.kind == "kstar") return gen_kstar(req.k, req.n);
    if (req.kind == "random") return gen_random(req.k, req.n, req.seed);
    throw UsageError("unknown --kind '" + req.kind + "' (expected kpath, kstar or random)");
}

struct InputGraph {
    Graph graph;
    int k = 0;
};

InputGraph input_graph(const CommandRequest& req) {
    if (req.input.empty()) {
        KTree t = generated(req);
        return {t.graph(), t.k()};
    }
    EdgeListFile f = req.input == "-" ? read_edge_list(std::cin) : read_edge_list_file(req.input);
    int k = req.k > 0 ? req.k : f.k;
    if (k < 1) throw UsageError(req.subcommand + ": input declares k = 0; pass -k");
    return {std::move(f.graph), k};
}

KTree input_ktree(const CommandRequest& req) {
    InputGraph in = input_graph(req);
    auto rec = recognize(in.graph, in.k);
    if (!rec) {
        throw UsageError("input is not a " + std::to_string(in.k) + "-tree (residue: " + join(rec.residue) + ")");
    }
    return std::move(*rec.ktree);
}

void no_dot(const CommandRequest& req) {
    if (req.format == Format::dot) throw UsageError(req.subcommand + ": dot output is only available for graphs");
}

ordered_json graph_json(const Graph& g, int k) {
    ordered_json j;
    j["n"] = g.order();
    j["k"] = k;
    ordered_json edges = ordered_json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    return j;
}

ordered_json index_json(const IndexValue& v, IndexFamily f, std::optional<double> c) {
    ordered_json j;
    j["family"] = to_string(f);
    if (c) j["c"] = c_json(*c);
    j["exact"] = v.exact ? ordered_json(v.decimal()) : ordered_json(nullptr);
    j["log10"] = v.log10();
    return j;
}

int cmd_gen(const CommandRequest& req, std::ostream& out) {
    KTree t = generated(req);
    switch (req.format) {
    case Format::text: write_ktree(out, t); break;
    case Format::dot: write_dot(out, t.graph()); break;
    case Format::json: out << graph_json(t.graph(), t.k()).dump() << '\n'; break;
    }
    return kExitOk;
}

int cmd_index(const CommandRequest& req, std::ostream& out) {
    no_dot(req);
    require_c(req);
    InputGraph in = input_graph(req);
    struct Row {
        IndexFamily family;
        std::optional<double> c;
        IndexValue value;
    };
    std::vector<Row> rows;
    const bool all = !req.family.has_value();
    if (all || req.family == IndexFamily::PI1C) {
        for (double c : req.c) rows.push_back({IndexFamily::PI1C, c, index_pi1c(in.graph, c)});
    }
    if (all || req.family == IndexFamily::PI2) rows.push_back({IndexFamily::PI2, {}, index_pi2(in.graph)});
    if (all || req.family == IndexFamily::NK) rows.push_back({IndexFamily::NK, {}, index_nk(in.graph)});
    for (const auto& r : rows) {
        if (req.format == Format::json) {
            out << index_json(r.value, r.family, r.c).dump() << '\n';
        } else {
            out << to_string(r.family);
            if (r.c) out << " c=" << format_c(*r.c);
            out << " exact=" << (r.value.exact ? r.value.decimal() : "-") << " log10=" << fixed10(r.value.log10())
                << '\n';
        }
    }
    return kExitOk;
}

int cmd_recognize(const CommandRequest& req, std::ostream& out) {
    no_dot(req);
    InputGraph in = input_graph(req);
    auto rec = recognize(in.graph, in.k);
    if (req.format == Format::json) {
        ordered_json j;
        j["k"] = in.k;
        j["n"] = in.graph.order();
        j["ktree"] = static_cast<bool>(rec);
        if (rec) {
            j["order"] = rec.ktree->elimination().order;
            j["base"] = rec.ktree->elimination().base;
        } else {
            j["residue"] = rec.residue;
        }
        out << j.dump() << '\n';
    } else if (rec) {
        out << "k-tree yes k=" << in.k << " n=" << in.graph.order() << '\n';
        out << "elimination " << join(rec.ktree->elimination().order) << '\n';
        out << "base " << join(rec.ktree->elimination().base) << '\n';
    } else {
        out << "k-tree no k=" << in.k << " n=" << in.graph.order() << '\n';
        out << "residue " << join(rec.residue) << '\n';
    }
    return kExitOk;
}

int cmd_layers(const CommandRequest& req, std::ostream& out) {
    no_dot(req);
    KTree t = input_ktree(req);
    const auto layers = simplicial_layers(t);
    if (req.format == Format::json) {
        ordered_json j;
        j["layers"] = layers.layers;
        j["terminal"] = layers.terminal;
        out << j.dump() << '\n';
        return kExitOk;
    }
    for (std::size_t i = 0; i < layers.layers.size(); ++i) {
        out << "S" << i + 1 << ": " << join(layers.layers[i]) << '\n';
    }
    out << "terminal: " << join(layers.terminal) << '\n';
    return kExitOk;
}

int cmd_cuts(const CommandRequest& req, std::ostream& out) {
    no_dot(req);
    KTree t = input_ktree(req);
    const auto cuts = cut_kcliques(t);
    const auto pend = hyper_pendant_decomposition(t);
    if (req.format == Format::json) {
        ordered_json j;
        ordered_json cj = ordered_json::array();
        for (const auto& c : cuts) cj.push_back({{"clique", c.clique}, {"w", c.components}});
        j["cuts"] = std::move(cj);
        j["whole_graph_pendant"] = pend.whole_graph;
        ordered_json pj = ordered_json::array();
        for (const auto& p : pend.pendants) pj.push_back({{"cut", p.cut}, {"branch", p.branch}, {"tip", p.tip}});
        j["pendants"] = std::move(pj);
        out << j.dump() << '\n';
        return kExitOk;
    }
    for (const auto& c : cuts) out << "cut {" << join(c.clique, ',') << "} w=" << c.components << '\n';
    if (pend.whole_graph) out << "pendant whole-graph\n";
    for (const auto& p : pend.pendants) {
        out << "pendant cut {" << join(p.cut, ',') << "} branch {" << join(p.branch, ',') << "} tip " << p.tip
            << '\n';
    }
    return kExitOk;
}

int cmd_enumerate(const CommandRequest& req, std::ostream& out) {
    no_dot(req);
    require_kn(req);
    EnumerationReport r;
    if (req.method == "growth") {
        r = unlabeled_representatives(enumerate_labeled_growth(req.k, req.n));
    } else if (req.method == "filter") {
        r = unlabeled_representatives(enumerate_labeled_filter(req.k, req.n));
    } else if (req.method == "canonical") {
        r = enumerate_unlabeled(req.k, req.n);
    } else {
        throw UsageError("unknown --method '" + req.method + "' (expected growth, filter or canonical)");
    }
    if (req.format == Format::json) {
        out << census_summary_json(r) << '\n';
        return kExitOk;
    }
    out << "k=" << r.k << " n=" << r.n << " method=" << to_string(r.method) << " labeled=" << r.labeled_count
        << " unlabeled=" << r.unlabeled_count << '\n';
    write_census(out, r);
    return kExitOk;
}

std::string class_label(const BoundCheck& b, std::size_t cls, int k, int n) {
    const bool s = static_cast<int>(cls) == b.star_class;
    const bool p = static_cast<int>(cls) == b.path_class;
    if (s && p) return star_name(k, n) + "=" + path_name(k, n);
    if (s) return star_name(k, n);
    if (p) return path_name(k, n);
    return "class " + std::to_string(cls);
}

std::string check_line(const BoundCheck& b, int k, int n, bool need_unique) {
    const std::string name = b.params.family == IndexFamily::PI1C ? "Pi1c" : "Pi2";
    std::string line;
    if (b.params.family == IndexFamily::PI1C) line += "c=" + format_c(b.params.c) + ": ";
    const auto& lo = b.scan.values[b.scan.argmin].value;
    const auto& hi = b.scan.values[b.scan.argmax].value;
    line += "min " + name + "=" + value_text(lo) + " @ " + class_label(b, b.scan.argmin, k, n);
    line += "; max " + name + "=" + value_text(hi) + " @ " + class_label(b, b.scan.argmax, k, n);
    line += b.holds ? "; bounds hold" : "; FALSIFIED";
    if (b.degenerate) line += "; degenerate (star = path)";
    else if (b.unique) line += "; unique";
    else line += need_unique ? "; NOT unique" : "; not unique";
    return line;
}

int cmd_verify(const CommandRequest& req, std::ostream& out) {
    no_dot(req);
    require_kn(req);
    require_c(req);
    const VerificationReport r = verify_extremal_theorems(req.k, req.n, req.c);
    const bool need_unique = req.n >= req.k + 3;
    const int status = r.ok() ? kExitOk : kExitFalsified;

    if (req.format == Format::json) {
        ordered_json j;
        j["k"] = r.k;
        j["n"] = r.n;
        j["classes"] = r.census.unlabeled_count;
        auto check = [&](const BoundCheck& b) {
            ordered_json cj;
            cj["family"] = to_string(b.params.family);
            if (b.params.family == IndexFamily::PI1C) cj["c"] = c_json(b.params.c);
            cj["min"] = value_text(b.scan.values[b.scan.argmin].value);
            cj["min_class"] = class_label(b, b.scan.argmin, r.k, r.n);
            cj["max"] = value_text(b.scan.values[b.scan.argmax].value);
            cj["max_class"] = class_label(b, b.scan.argmax, r.k, r.n);
            cj["holds"] = b.holds;
            cj["unique"] = b.unique;
            cj["degenerate"] = b.degenerate;
            return cj;
        };
        ordered_json checks = ordered_json::array();
        for (const auto& b : r.first_index) checks.push_back(check(b));
        checks.push_back(check(r.second_index));
        j["checks"] = std::move(checks);
        j["ok"] = r.ok();
        out << j.dump() << '\n';
        return status;
    }

    out << "k=" << r.k << " n=" << r.n << " classes=" << r.census.unlabeled_count
        << " labeled=" << r.census.labeled_count << '\n';
    out << "class\tshape";
    for (const auto& b : r.first_index) out << "\tPi1c(c=" << format_c(b.params.c) << ")";
    out << "\tPi2\n";
    for (std::size_t i = 0; i < r.census.representatives.size(); ++i) {
        out << i << '\t' << class_label(r.second_index, i, r.k, r.n);
        for (const auto& b : r.first_index) out << '\t' << value_text(b.scan.values[i].value);
        out << '\t' << value_text(r.second_index.scan.values[i].value) << '\n';
    }
    for (const auto& b : r.first_index) out << check_line(b, r.k, r.n, need_unique) << '\n';
    out << check_line(r.second_index, r.k, r.n, need_unique) << '\n';
    out << (r.ok() ? "verified" : "falsified") << '\n';
    return status;
}

int cmd_search(const CommandRequest& req, std::ostream& out) {
    require_c(req);
    KTree t = input_ktree(req);
    if (t.order() < t.k() + 1) throw UsageError("search: need n >= k+1");
    Objective obj;
    obj.params.family = req.family.value_or(IndexFamily::PI1C);
    if (obj.params.family == IndexFamily::NK) throw UsageError("search: family must be PI1C or PI2");
    obj.params.c = req.c.front();
    if (req.direction == "min") obj.goal = Goal::minimize;
    else if (req.direction == "max") obj.goal = Goal::maximize;
    else throw UsageError("unknown --direction '" + req.direction + "' (expected min or max)");

    const SearchReport r = local_search(t, obj);
    switch (req.format) {
    case Format::text: write_trace(out, r); break;
    case Format::dot: write_dot(out, r.fixed_point.graph()); break;
    case Format::json: {
        ordered_json j;
        j["steps"] = r.steps.size();
        j["fixed_point"] = to_string(r.fixed_point_class);
        j["start"] = index_json(r.start_value, obj.params.family,
                                obj.params.family == IndexFamily::PI1C ? std::optional(obj.params.c) : std::nullopt);
        j["final"] = index_json(r.final_value, obj.params.family,
                                obj.params.family == IndexFamily::PI1C ? std::optional(obj.params.c) : std::nullopt);
        j["graph"] = graph_json(r.fixed_point.graph(), r.fixed_point.k());
        out << j.dump() << '\n';
        break;
    }
    }
    return kExitOk;
}

int cmd_audit(const CommandRequest& req, std::ostream& out) {
    no_dot(req);
    require_kn(req);
    require_c(req);
    if (req.n < req.k + 1) throw UsageError("audit: need n >= k+1");
    for (double c : req.c) {
        const AuditReport a = audit_published_formulas(req.k, req.n, c);
        if (req.format == Format::json) {
            ordered_json j;
            j["k"] = a.k;
            j["n"] = a.n;
            j["c"] = c_json(c);
            ordered_json es = ordered_json::array();
            for (const auto& e : a.entries) {
                es.push_back({{"statement", e.statement}, {"formula", e.formula}, {"literal", e.literal},
                              {"direct", e.direct}, {"agrees", e.agrees}});
            }
            j["entries"] = std::move(es);
            j["discrepancies"] = a.discrepancies();
            out << j.dump() << '\n';
            continue;
        }
        out << "audit k=" << a.k << " n=" << a.n << " c=" << format_c(c) << '\n';
        for (const auto& e : a.entries) {
            out << (e.agrees ? "  ok          " : "  DISCREPANCY ") << e.statement << ": literal " << e.literal
                << " vs direct " << e.direct << "   [" << e.formula << "]\n";
        }
        out << "discrepancies " << a.discrepancies() << '\n';
    }
    return kExitOk;
}

} // namespace

int run(const CommandRequest& req, std::ostream& out, std::ostream& err) {
    std::ostringstream buf;
    int status = kExitOk;
    try {
        const std::string& s = req.subcommand;
        if (s == "gen") status = cmd_gen(req, buf);
        else if (s == "index") status = cmd_index(req, buf);
        else if (s == "recognize") status = cmd_recognize(req, buf);
        else if (s == "layers") status = cmd_layers(req, buf);
        else if (s == "cuts") status = cmd_cuts(req, buf);
        else if (s == "enumerate") status = cmd_enumerate(req, buf);
        else if (s == "verify") status = cmd_verify(req, buf);
        else if (s == "search") status = cmd_search(req, buf);
        else if (s == "audit") status = cmd_audit(req, buf);
        else throw UsageError("unknown subcommand '" + s + "'");
    } catch (const std::exception& e) {
        err << "ktz: " << e.what() << '\n';
        return kExitUsage;
    }
    if (req.output.empty() || req.output == "-") {
        out << buf.str();
    } else {
        std::ofstream f(req.output, std::ios::binary);
        if (!f) {
            err << "ktz: cannot write " << req.output << '\n';
            return kExitUsage;
        }
        f << buf.str();
    }
    return status;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"ktz: k-trees, multiplicative Zagreb indices and their extremal graphs"};
    app.require_subcommand(1, 1);
    CommandRequest req;
    std::string family;
    std::string format = "text";

    auto common = [&](CLI::App* sub) {
        sub->add_option("-k", req.k, "clique parameter k");
        sub->add_option("-n", req.n, "number of vertices");
        sub->add_option("-c", req.c, "exponent(s) for Pi1c")->delimiter(',');
        sub->add_option("--family", family, "PI1C, PI2 or NK");
        sub->add_option("--seed", req.seed, "seed for --kind random");
        sub->add_option("--direction", req.direction, "min or max (search)");
        sub->add_option("--kind", req.kind, "kpath, kstar or random, when no input is given");
        sub->add_option("--method", req.method, "growth, filter or canonical (enumerate)");
        sub->add_option("-i,--input", req.input, "edge-list file, '-' for stdin");
        sub->add_option("-o,--output", req.output, "output file (default stdout)");
        sub->add_option("--format", format, "text, json or dot");
    };
    const std::pair<const char*, const char*> subs[] = {
        {"gen", "generate a k-path, k-star or random k-tree"},
        {"index", "multiplicative Zagreb indices of a graph"},
        {"recognize", "test for a k-tree and print an elimination order"},
        {"layers", "simplicial layers of a k-tree"},
        {"cuts", "cut k-cliques and hyper pendants"},
        {"enumerate", "census of k-trees on n vertices"},
        {"verify", "exhaustive check of the extremal bounds"},
        {"search", "monotone rewiring search toward the extremal graph"},
        {"audit", "evaluate the published closed forms verbatim"},
    };
    for (const auto& [name, help] : subs) common(app.add_subcommand(name, help));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "ktz: " << e.what() << '\n';
        return kExitUsage;
    }
    req.subcommand = app.get_subcommands().front()->get_name();
    try {
        if (!family.empty()) req.family = parse_family(family);
        if (format == "text") req.format = Format::text;
        else if (format == "json") req.format = Format::json;
        else if (format == "dot") req.format = Format::dot;
        else throw UsageError("unknown --format '" + format + "' (expected text, json or dot)");
    } catch (const std::exception& e) {
        err << "ktz: " << e.what() << '\n';
        return kExitUsage;
    }
    return run(req, out, err);
}

} // namespace ktz::cli
