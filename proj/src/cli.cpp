#include "kconn/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "kconn/assertions.hpp"
#include "kconn/classes.hpp"
#include "kconn/enumeration.hpp"
#include "kconn/generators.hpp"
#include "kconn/graph6.hpp"
#include "kconn/transforms.hpp"

namespace kconn {

namespace {

constexpr int kUsageError = 2;

struct Options {
    int k = 3;
    std::string input;
    std::string format = "json";
    std::string level = "strict";
    int workers = 0;
    bool timing = false;
    std::string orders = "1..8";
    std::string graph_class = "super-minimal";
};

int env_workers() {
    if (const char* s = std::getenv("KCONN_WORKERS")) {
        char* end = nullptr;
        long w = std::strtol(s, &end, 10);
        if (end != s && *end == '\0' && w >= 1 && w <= 256) return static_cast<int>(w);
    }
    return 1;
}

OrderRange parse_orders(const std::string& s) {
    OrderRange r;
    try {
        std::size_t dots = s.find("..");
        std::size_t used = 0;
        if (dots == std::string::npos) {
            r.lo = r.hi = std::stoi(s, &used);
            if (used != s.size()) throw std::invalid_argument(s);
        } else {
            r.lo = std::stoi(s.substr(0, dots), &used);
            if (used != dots) throw std::invalid_argument(s);
            std::string tail = s.substr(dots + 2);
            r.hi = std::stoi(tail, &used);
            if (used != tail.size()) throw std::invalid_argument(s);
        }
    } catch (const std::logic_error&) {
        throw GraphError("bad order range '" + s + "' (expected N or A..B)");
    }
    if (r.lo < 1 || r.hi < r.lo) throw GraphError("empty order range '" + s + "'");
    return r;
}

Edge parse_edge(const std::string& s) {
    std::size_t sep = s.find_first_of(",-");
    if (sep == std::string::npos) throw GraphError("bad edge '" + s + "' (expected a-b)");
    try {
        std::size_t used = 0;
        int a = std::stoi(s.substr(0, sep), &used);
        if (used != sep) throw std::invalid_argument(s);
        std::string tail = s.substr(sep + 1);
        int b = std::stoi(tail, &used);
        if (used != tail.size()) throw std::invalid_argument(s);
        return Edge(a, b);
    } catch (const std::logic_error&) {
        throw GraphError("bad edge '" + s + "' (expected a-b)");
    }
}

Json edge_json(const Edge& e) { return Json::array({e.u, e.v}); }

Json certificate_json(const ClassCertificate& c) {
    Json j = Json::object();
    if (c.not_k_connected) {
        j["not_k_connected"] = {{"cut", c.not_k_connected->cut},
                                {"side_a", c.not_k_connected->side_a},
                                {"side_b", c.not_k_connected->side_b}};
    }
    if (c.not_minimal) j["not_minimal"] = edge_json(*c.not_minimal);
    if (c.not_critical) j["not_critical"] = *c.not_critical;
    if (c.not_uniform) {
        j["not_uniform"] = {{"u", c.not_uniform->u},
                            {"v", c.not_uniform->v},
                            {"count", c.not_uniform->count},
                            {"paths", c.not_uniform->paths.paths}};
    }
    if (c.not_super_minimal) {
        Json edges = Json::array();
        for (const Edge& e : c.not_super_minimal->edges) edges.push_back(edge_json(e));
        j["not_super_minimal"] = {{"vertices", c.not_super_minimal->vertices}, {"edges", std::move(edges)}};
    }
    j["edges_checked"] = c.edges_checked;
    j["vertices_checked"] = c.vertices_checked;
    j["pairs_checked"] = c.pairs_checked;
    j["subproblems_checked"] = c.subproblems_checked;
    return j;
}

class Session {
public:
    Session(std::istream& in, std::ostream& out, std::ostream& err) : in_(in), out_(out), err_(err) {}

    Options opt;

    void emit(const Json& rec) {
        if (opt.format == "table") {
            bool first = true;
            for (const auto& [key, value] : rec.items()) {
                if (key == "record") continue;
                out_ << (first ? "" : " ") << key << '=' << (value.is_string() ? value.get<std::string>() : value.dump());
                first = false;
            }
            out_ << '\n';
        } else {
            out_ << rec.dump() << '\n';
        }
    }

    int error(const std::string& message) {
        emit(Json{{"record", "error"}, {"message", message}});
        return kUsageError;
    }

    std::istream& input() {
        if (opt.input.empty() || opt.input == "-") return in_;
        file_.open(opt.input);
        if (!file_) throw GraphError("cannot open input file '" + opt.input + "'");
        return file_;
    }

    void apply_level() { set_assertion_level(opt.level == "fast" ? AssertionLevel::Fast : AssertionLevel::Strict); }

    int workers() const { return opt.workers > 0 ? opt.workers : env_workers(); }

    int classify_cmd() {
        apply_level();
        int status = 0;
        for (const StreamRecord& r : read_graph6_stream(input())) {
            if (!r.ok()) {
                emit(Json{{"record", "error"}, {"line", r.line_number}, {"message", r.error}});
                status = kUsageError;
                continue;
            }
            try {
                Classification c = classify(r.graph, opt.k);
                Json rec;
                rec["record"] = "classification";
                rec["line"] = r.line_number;
                rec["graph6"] = to_graph6(r.graph);
                rec["k"] = c.label.k;
                rec["k_connected"] = c.label.k_connected;
                rec["minimal"] = c.label.minimal;
                rec["critical"] = c.label.critical;
                rec["uniform"] = c.label.uniform;
                rec["super_minimal"] = c.label.super_minimal;
                rec["certificate"] = certificate_json(c.certificate);
                emit(rec);
            } catch (const InvariantViolation& e) {
                emit(Json{{"record", "violation"}, {"line", r.line_number}, {"message", e.what()}});
                status = std::max(status, 1);
            }
        }
        return status;
    }

    int gen_cmd(const std::string& family, const std::vector<int>& params) {
        out_ << to_graph6(generate(family, params)) << '\n';
        return 0;
    }

    int job_cmd(const std::string& job) {
        apply_level();
        const auto start = std::chrono::steady_clock::now();
        const OrderRange orders = parse_orders(opt.orders);
        std::vector<Graph> external;
        long input_errors = 0;
        std::vector<Json> error_records;
        const bool from_stream = !opt.input.empty();
        if (from_stream) {
            for (StreamRecord& r : read_graph6_stream(input())) {
                if (r.ok()) {
                    external.push_back(std::move(r.graph));
                } else {
                    ++input_errors;
                    error_records.push_back(Json{{"record", "error"}, {"line", r.line_number}, {"message", r.error}});
                }
            }
        }
        ClassifiedPopulation pop = build_population(opt.k, orders, workers(), from_stream ? &external : nullptr);
        JobReport report;
        auto graph_class = [&] {
            std::optional<GraphClass> c = parse_graph_class(opt.graph_class);
            if (!c) throw GraphError("unknown class '" + opt.graph_class + "'");
            return *c;
        };
        if (job == "degree-bound") {
            report = verify_degree_bound(pop, graph_class());
        } else if (job == "edge-bound") {
            report = verify_edge_bound(pop, graph_class());
        } else if (job == "inclusions") {
            report = verify_inclusions(pop);
        } else if (job == "lemmas") {
            report = check_structure_lemmas(pop);
        } else if (job == "operations") {
            report = check_operations(pop);
        } else if (job == "conjecture") {
            report = conjecture_scan(pop);
        } else if (job == "extremal") {
            report = extremal_search(pop);
        } else {
            return error("unknown job '" + job + "'");
        }
        for (const Json& e : error_records) emit(e);
        report.input_errors += input_errors;
        if (!report.records.empty()) report.records.back()["input_errors"] = report.input_errors;
        for (const Json& rec : report.records) emit(rec);
        err_ << report.job << ": " << report.violations << " violations, " << report.input_errors << " input errors\n";
        if (opt.timing) {
            const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            err_ << "elapsed " << seconds << " s\n";
        }
        return report.exit_status();
    }

    Graph read_graph(const std::string& text) {
        if (!text.empty()) return from_graph6(text);
        for (const StreamRecord& r : read_graph6_stream(input())) {
            if (!r.ok()) throw Graph6Error("line " + std::to_string(r.line_number) + ": " + r.error);
            return r.graph;
        }
        throw Graph6Error("no graph on input");
    }

    int transform_cmd(const std::string& op, const std::string& graph_text, int vertex, const std::vector<std::string>& edges,
                      const std::vector<int>& side) {
        apply_level();
        const Graph g = read_graph(graph_text);
        std::vector<Edge> es;
        for (const std::string& s : edges) es.push_back(parse_edge(s));
        Json rec;
        rec["record"] = "transform";
        rec["op"] = op;
        rec["input"] = to_graph6(g);
        auto need = [&](bool ok, const char* what) {
            if (!ok) throw GraphError(op + ": " + what);
        };
        if (op == "bridge") {
            if (vertex >= 0) {
                need(es.size() == 1, "vertex-to-edge bridging takes --vertex and one --edge");
                rec["output"] = to_graph6(bridge_vertex_edge(g, vertex, es[0]));
            } else {
                need(es.size() == 2, "edge-to-edge bridging takes two --edge options");
                rec["output"] = to_graph6(bridge_edge_edge(g, es[0], es[1]));
            }
        } else if (op == "enhanced-delete") {
            need(es.size() == 1, "takes one --edge");
            EnhancedDeletion d = enhanced_delete(g, es[0]);
            rec["output"] = to_graph6(d.graph);
            rec["case"] = to_string(d.which);
            Json added = Json::array();
            for (const Edge& e : d.added_edges) added.push_back(edge_json(e));
            rec["added_edges"] = std::move(added);
            rec["removed_vertices"] = d.removed_vertices;
        } else if (op == "split") {
            need(vertex >= 0 && g.valid(vertex), "takes --vertex");
            need(!side.empty(), "takes --side with the neighbors kept by the vertex");
            VertexSet a = make_vertex_set(g, side);
            VertexSet b;
            for (Vertex w : g.neighbors(vertex)) {
                if (!std::binary_search(a.begin(), a.end(), w)) b.push_back(w);
            }
            rec["output"] = to_graph6(split_vertex(g, vertex, a, b));
        } else if (op == "contract") {
            ForestContraction f = contract_degree_forest(g, opt.k);
            rec["output"] = to_graph6(f.graph);
            Json forest = Json::array();
            for (const Edge& e : f.forest_edges) forest.push_back(edge_json(e));
            rec["forest_edges"] = std::move(forest);
            rec["simple"] = f.simple;
        } else if (op == "cleave") {
            need(es.size() == 1, "takes one --edge");
            std::optional<CompatibleSet> s = find_compatible_set(g, es[0]);
            if (!s) {
                rec["compatible_set"] = nullptr;
            } else {
                Cleaved c = cleave(g, *s);
                Json oriented = Json::array();
                for (const OrientedEdge& e : s->edges) oriented.push_back(Json::array({e.a, e.b}));
                rec["compatible_set"] = {{"type", to_string(s->type)}, {"edges", std::move(oriented)}, {"vertices", s->vertices}};
                rec["a"] = to_graph6(c.a);
                rec["b"] = to_graph6(c.b);
            }
        } else {
            return error("unknown transform '" + op + "'");
        }
        emit(rec);
        return 0;
    }

private:
    std::istream& in_;
    std::ostream& out_;
    std::ostream& err_;
    std::ifstream file_;
};

void add_common(CLI::App* cmd, Options& opt, bool with_input) {
    cmd->add_option("--k", opt.k, "Connectivity k (default 3)")->check(CLI::Range(1, 64));
    cmd->add_option("--format", opt.format, "Output format: json (JSON lines) or table")
        ->check(CLI::IsMember({"json", "table"}));
    cmd->add_option("--level", opt.level, "Assertion level: strict or fast")->check(CLI::IsMember({"strict", "fast"}));
    if (with_input) cmd->add_option("--input", opt.input, "graph6 file, '-' for stdin");
}

void add_population(CLI::App* cmd, Options& opt) {
    cmd->add_option("--n", opt.orders, "Orders N or A..B (default 1..8)");
    cmd->add_option("--workers", opt.workers, "Worker threads (default: KCONN_WORKERS or 1)")->check(CLI::Range(1, 256));
    cmd->add_flag("--timing", opt.timing, "Print elapsed time on stderr");
}

}  // namespace

int run_cli(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
    Session session(in, out, err);
    Options& opt = session.opt;

    CLI::App app{"Connectivity classes of small graphs: classification, generators, verification jobs, transforms",
                 "kconn"};
    app.require_subcommand(1);

    CLI::App* classify_app = app.add_subcommand("classify", "Classify graph6 lines from stdin or --input at --k");
    add_common(classify_app, opt, true);

    std::string family;
    std::vector<int> params;
    CLI::App* gen_app = app.add_subcommand("gen", "Print a family member as graph6: gen <family> <params...>");
    gen_app->add_option("family", family, "One of: cycle complete complete_bipartite wheel theta dim_wheel "
                                          "aug_dim_wheel alt_double_wheel kn_minus_cn kn_minus_pn q")
        ->required();
    gen_app->add_option("params", params, "Integer parameters");

    std::string job;
    CLI::App* verify_app = app.add_subcommand("verify", "Run a verification job over an enumerated or streamed population");
    verify_app->add_option("job", job, "degree-bound | edge-bound | inclusions | lemmas | conjecture | operations")
        ->required()
        ->check(CLI::IsMember({"degree-bound", "edge-bound", "inclusions", "lemmas", "conjecture", "operations"}));
    verify_app->add_option("--class", opt.graph_class, "minimal | uniform | super-minimal (default super-minimal)")
        ->check(CLI::IsMember({"minimal", "uniform", "super-minimal"}));
    add_common(verify_app, opt, true);
    add_population(verify_app, opt);

    std::string target;
    CLI::App* search_app = app.add_subcommand("search", "Search for extremal graphs: search extremal --n N");
    search_app->add_option("target", target, "extremal")->required()->check(CLI::IsMember({"extremal"}));
    add_common(search_app, opt, true);
    add_population(search_app, opt);

    std::string op, graph_text;
    int vertex = -1;
    std::vector<std::string> edges;
    std::vector<int> side;
    CLI::App* transform_app = app.add_subcommand("transform", "Apply an operation to one graph (--graph or first input line)");
    transform_app->add_option("op", op, "bridge | enhanced-delete | split | contract | cleave")
        ->required()
        ->check(CLI::IsMember({"bridge", "enhanced-delete", "split", "contract", "cleave"}));
    transform_app->add_option("--graph", graph_text, "Input graph as graph6");
    transform_app->add_option("--vertex", vertex, "Vertex for bridge (vertex-to-edge) or split");
    transform_app->add_option("--edge", edges, "Edge a-b; repeat for edge-to-edge bridging");
    transform_app->add_option("--side", side, "Neighbors kept by the split vertex");
    add_common(transform_app, opt, true);

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        err << app.help();
        return kUsageError;
    }

    try {
        if (classify_app->parsed()) return session.classify_cmd();
        if (gen_app->parsed()) return session.gen_cmd(family, params);
        if (verify_app->parsed()) return session.job_cmd(job);
        if (search_app->parsed()) {
            opt.k = 3;
            return session.job_cmd("extremal");
        }
        if (transform_app->parsed()) return session.transform_cmd(op, graph_text, vertex, edges, side);
    } catch (const InvariantViolation& e) {
        session.emit(Json{{"record", "violation"}, {"message", e.what()}});
        return 1;
    } catch (const std::exception& e) {
        return session.error(e.what());
    }
    return kUsageError;
}

}  // namespace kconn
