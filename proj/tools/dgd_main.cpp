// dgd: directed graph duality toolkit.
//
// Verbs: check, normalize, convert, classify, grow, hamilton, roundtrip.
// Exit codes: 0 ok, 1 check failed, 2 input error, 3 cap exceeded.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "dgd/classify.hpp"
#include "dgd/convert.hpp"
#include "dgd/duality.hpp"
#include "dgd/hamilton.hpp"
#include "dgd/io.hpp"
#include "dgd/normalize.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitCapExceeded = 3;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

dgd::Digraph load(const std::string& path) { return dgd::parse_arc_list(read_input(path)); }

const char* yes_no(bool b) { return b ? "yes" : "no"; }

void print_standing_note(const dgd::Digraph& g) {
    dgd::FValidityReport f = dgd::validate_f_requirements(g, dgd::FMode::Quasicanonical);
    if (!f.ok) {
        std::cout << "note: input violates the single-entrance/exit form:\n";
        for (const dgd::FViolation& v : f.violations)
            std::cout << "  " << v.rule << ": " << v.description << "\n";
    }
}

dgd::AugmentMode parse_augment(const std::string& s) {
    if (s == "never")
        return dgd::AugmentMode::Never;
    if (s == "auto")
        return dgd::AugmentMode::Auto;
    return dgd::AugmentMode::Faithful;
}

void print_trace_csv(const dgd::ConvertTrace& t, const dgd::GrowthPrediction* pred) {
    std::cout << "step,n,m,nu,delta_nu,class";
    if (pred)
        std::cout << ",n_predicted,nu_predicted";
    std::cout << "\n";
    for (size_t j = 0; j < t.steps.size(); ++j) {
        const dgd::ConvertStep& s = t.steps[j];
        std::cout << s.index << "," << s.n << "," << s.m << "," << s.nu << "," << s.delta_nu << ","
                  << dgd::to_string(s.cls);
        if (pred) {
            if (j < pred->n.size())
                std::cout << "," << pred->n[j] << "," << pred->nu[j];
            else
                std::cout << ",,";
        }
        std::cout << "\n";
    }
}

int run_check(const std::string& input, bool require_canonical, bool as_json) {
    dgd::Digraph g = load(input);
    dgd::DualityVerdict v = dgd::is_canonical(dgd::as_l_matrix(g));
    if (as_json) {
        std::cout << dgd::to_json(v).dump(2) << "\n";
    } else {
        std::cout << "quasi-canonical: " << yes_no(v.quasi_canonical) << "\n";
        std::cout << "canonical: " << yes_no(v.canonical) << "\n";
        for (const dgd::ArcViolation& a : v.violating_arcs)
            std::cout << "violating arc " << a.tail << "->" << a.head << ": " << a.reason << "\n";
        for (const dgd::Arc& a : v.minor_failures)
            std::cout << "minor failure at " << a.tail << "->" << a.head << "\n";
        if (v.conditions_disagree)
            std::cout << "note: the full-matrix and minor conditions disagree on this input\n";
    }
    bool ok = require_canonical ? v.canonical : v.quasi_canonical;
    return ok ? kExitOk : kExitCheckFailed;
}

int run_normalize(const std::string& input, const std::string& mode, const std::string& strategy,
                  bool as_json) {
    dgd::Digraph g = load(input);
    dgd::SweepStrategy st = strategy == "immediate" ? dgd::SweepStrategy::ImmediateRecompute
                                                    : dgd::SweepStrategy::SweepThenRecompute;
    dgd::NormalizationReport r = mode == "quasi"
                                     ? dgd::quasi_normalize(dgd::as_l_matrix(g), st)
                                     : dgd::normalize_canonical(dgd::as_l_matrix(g), st);
    if (as_json) {
        std::cout << dgd::to_json(r).dump(2) << "\n";
    } else {
        std::cout << "converged: " << yes_no(r.converged) << "\n";
        std::cout << "insertions: " << r.s_q << "\n";
        std::cout << "rounds: " << r.rounds << "\n";
        for (size_t i = 0; i < r.steps.size(); ++i)
            std::cout << "step " << i + 1 << ": subdivide " << r.steps[i].arc.tail << "->"
                      << r.steps[i].arc.head << ", new vertex " << r.steps[i].new_vertex << "\n";
        for (const std::string& note : r.notes)
            std::cout << "note: " << note << "\n";
        std::cout << "-- input --\n" << dgd::emit_arc_list(g);
        std::cout << "-- result --\n" << dgd::emit_arc_list(r.result.graph);
    }
    return r.converged ? kExitOk : kExitCapExceeded;
}

int run_convert(const std::string& input, int steps, const std::string& augment, long long cap,
                bool dot, bool labels) {
    dgd::Digraph g = load(input);
    dgd::TraceOptions opt;
    opt.steps = steps;
    opt.augment = parse_augment(augment);
    opt.vertex_cap = cap;
    opt.keep_graphs = dot || labels;  // the tuple table reads the previous step's arcs
    opt.keep_tuples = labels;
    dgd::ConvertTrace t = dgd::iterate_convert(g, opt);

    if (dot) {
        for (const dgd::ConvertStep& s : t.steps)
            std::cout << dgd::to_dot(s.graph, "step" + std::to_string(s.index));
    } else if (labels) {
        for (size_t j = 1; j < t.steps.size(); ++j) {
            const dgd::ConvertStep& prev = t.steps[j - 1];
            const dgd::ConvertStep& cur = t.steps[j];
            std::cout << "# step " << cur.index << "\n";
            std::cout << "id,begin,end,tuple\n";
            for (size_t v = 0; v < cur.tuples.size(); ++v) {
                std::string begin, end;
                if (v < static_cast<size_t>(prev.m)) {
                    // vertex v stands for arc v of the previous step
                    const dgd::Arc& a = prev.graph.arc(static_cast<int>(v));
                    begin = dgd::tuple_label(prev.tuples[static_cast<size_t>(a.tail)], g,
                                             t.terminal_names);
                    end = dgd::tuple_label(prev.tuples[static_cast<size_t>(a.head)], g,
                                           t.terminal_names);
                }
                std::cout << v << "," << dgd::csv_field(begin) << "," << dgd::csv_field(end) << ","
                          << dgd::csv_field(dgd::tuple_label(cur.tuples[v], g, t.terminal_names))
                          << "\n";
            }
        }
    } else {
        print_trace_csv(t, nullptr);
    }
    if (t.capped) {
        std::cerr << "size cap exceeded: next step needs " << t.predicted_next << " vertexes\n";
        return kExitCapExceeded;
    }
    return kExitOk;
}

int run_classify(const std::string& input, int verify_steps, bool as_json) {
    dgd::Digraph g = load(input);
    dgd::ClassReport r = dgd::classify_graph(g);
    if (as_json) {
        std::cout << dgd::to_json(r).dump(2) << "\n";
    } else {
        std::cout << "class: " << dgd::to_string(r.cls) << " (" << dgd::class_description(r.cls)
                  << ")\n";
        if (!r.contours.empty()) {
            std::cout << "contour:";
            for (dgd::VertexId v : r.contours.front())
                std::cout << " " << v;
            std::cout << " " << r.contours.front().front() << "\n";
        }
        if (!r.intervals.empty()) {
            const dgd::L31Interval& iv = r.intervals.front();
            std::cout << "intervals: " << r.intervals.size() << " (shortest length " << iv.length
                      << ":";
            for (dgd::VertexId v : iv.path)
                std::cout << " " << v;
            std::cout << ")\n";
        }
        if (r.j_max)
            std::cout << "j_max: " << *r.j_max << "\n";
        if (r.pure_contour_degenerate)
            std::cout << "note: pure contour, converting maps it onto itself\n";
        if (!r.standing_ok) {
            std::cout << "warning: single-entrance/exit assumptions violated:\n";
            for (const dgd::FViolation& v : r.standing_violations)
                std::cout << "  " << v.rule << ": " << v.description << "\n";
        }
    }
    if (verify_steps > 0) {
        dgd::TraceOptions opt;
        opt.steps = verify_steps;
        opt.augment = dgd::AugmentMode::Faithful;
        opt.keep_graphs = false;
        opt.keep_tuples = false;
        dgd::ConvertTrace t = dgd::iterate_convert(g, opt);
        dgd::GrowthPrediction p =
            dgd::predict_growth(g, verify_steps, dgd::AugmentMode::Faithful, opt.vertex_cap);
        print_trace_csv(t, &p);
    }
    return kExitOk;
}

int run_grow(const std::string& input, int steps, const std::string& augment, long long cap) {
    dgd::Digraph g = load(input);
    dgd::TraceOptions opt;
    opt.steps = steps;
    opt.augment = parse_augment(augment);
    opt.vertex_cap = cap;
    opt.keep_graphs = false;
    opt.keep_tuples = false;
    dgd::ConvertTrace t = dgd::iterate_convert(g, opt);
    dgd::GrowthPrediction p = dgd::predict_growth(g, steps, opt.augment, cap);
    print_trace_csv(t, &p);
    if (t.capped) {
        std::cerr << "size cap exceeded: next step needs " << t.predicted_next << " vertexes\n";
        return kExitCapExceeded;
    }
    return kExitOk;
}

int run_hamilton(const std::string& input, bool list, bool oracle, int bound) {
    dgd::Digraph g = load(input);
    auto cycles = dgd::hamilton_cycles_via_duality(g);
    std::cout << "hamilton cycles: " << cycles.size() << "\n";
    // (--count is the default output; the flag exists for explicitness)
    if (list)
        for (const auto& cycle : cycles) {
            std::cout << "cycle:";
            for (dgd::VertexId v : cycle)
                std::cout << " " << v;
            std::cout << " " << cycle.front() << "\n";
        }
    if (oracle) {
        auto brute = dgd::brute_force_hamilton(g, bound);
        std::cout << "oracle cycles: " << brute.size() << "\n";
        bool match = brute == cycles;
        std::cout << "oracle match: " << yes_no(match) << "\n";
        if (!match)
            return kExitCheckFailed;
    }
    return kExitOk;
}

int run_roundtrip(const std::string& input) {
    dgd::Digraph g = load(input);
    print_standing_note(g);
    dgd::Digraph image = dgd::straight_convert(g);
    dgd::RootReconstruction raw = dgd::reconstruct_root_raw(image);

    // raw.arcs[i] stands for image vertex i = arc i of g; the round trip
    // holds when that alignment induces one consistent vertex bijection.
    bool iso = g.order() == raw.order && !raw.has_parallel_arcs &&
               raw.arcs.size() == static_cast<size_t>(g.arc_count());
    if (iso) {
        std::vector<int> fwd(static_cast<size_t>(g.order()), -1);
        std::vector<int> bwd(static_cast<size_t>(raw.order), -1);
        auto bind = [&](dgd::VertexId x, dgd::VertexId y) {
            if (fwd[static_cast<size_t>(x)] < 0 && bwd[static_cast<size_t>(y)] < 0) {
                fwd[static_cast<size_t>(x)] = y;
                bwd[static_cast<size_t>(y)] = x;
                return true;
            }
            return fwd[static_cast<size_t>(x)] == y && bwd[static_cast<size_t>(y)] == x;
        };
        for (int i = 0; i < g.arc_count() && iso; ++i)
            iso = bind(g.arc(i).tail, raw.arcs[static_cast<size_t>(i)].tail) &&
                  bind(g.arc(i).head, raw.arcs[static_cast<size_t>(i)].head);
    }
    std::cout << "roundtrip: " << (iso ? "isomorphic" : "NOT isomorphic") << "\n";
    return iso ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"directed graph duality toolkit"};
    app.require_subcommand(1);

    std::string input = "-";
    bool require_canonical = false, as_json = false;
    std::string mode = "canonical", strategy = "sweep", augment = "auto";
    int steps = 1, verify_steps = 0, bound = 10;
    long long cap = 1'000'000;
    bool dot = false, labels = false, list = false, oracle = false;

    CLI::App* check = app.add_subcommand("check", "dual-nature test of the adjacency matrix");
    check->add_option("input", input, "arc-list file, or - for stdin");
    check->add_flag("--canonical", require_canonical, "require the strict form for exit code 0");
    check->add_flag("--json", as_json, "structured report");

    CLI::App* normalize = app.add_subcommand("normalize", "delta-n normalization");
    normalize->add_option("input", input, "arc-list file, or - for stdin");
    normalize->add_option("--mode", mode, "quasi|canonical (default canonical)")
        ->check(CLI::IsMember({"quasi", "canonical"}));
    normalize->add_option("--strategy", strategy, "sweep|immediate re-evaluation")
        ->check(CLI::IsMember({"sweep", "immediate"}));
    normalize->add_flag("--json", as_json, "structured report");

    CLI::App* convert = app.add_subcommand("convert", "iterated straight converting");
    convert->add_option("input", input, "arc-list file, or - for stdin");
    convert->add_option("--steps", steps, "number of conversions");
    convert->add_option("--augment", augment, "never|auto|faithful")
        ->check(CLI::IsMember({"never", "auto", "faithful"}));
    convert->add_option("--cap", cap, "vertex cap per step");
    convert->add_flag("--dot", dot, "emit DOT per step instead of the CSV trace");
    convert->add_flag("--labels", labels, "emit the per-step vertex tuple table");

    CLI::App* classify = app.add_subcommand("classify", "converting-class report");
    classify->add_option("input", input, "arc-list file, or - for stdin");
    classify->add_option("--verify", verify_steps, "compare predicted vs observed growth over k steps");
    classify->add_flag("--json", as_json, "structured report");

    CLI::App* grow = app.add_subcommand("grow", "predicted vs observed growth trace");
    grow->add_option("input", input, "arc-list file, or - for stdin");
    grow->add_option("--steps", steps, "number of conversions");
    grow->add_option("--augment", augment, "never|auto|faithful")
        ->check(CLI::IsMember({"never", "auto", "faithful"}));
    grow->add_option("--cap", cap, "vertex cap per step");

    CLI::App* hamilton = app.add_subcommand("hamilton", "Hamilton cycles via the edge-graph duality");
    hamilton->add_option("input", input, "arc-list file, or - for stdin");
    bool count_only = false;
    hamilton->add_flag("--count", count_only, "print the count only (the default)");
    hamilton->add_flag("--list", list, "print the cycles");
    hamilton->add_flag("--oracle", oracle, "compare against the brute-force oracle");
    hamilton->add_option("--bound", bound, "order bound for the oracle");

    CLI::App* roundtrip = app.add_subcommand("roundtrip", "straight-then-reverse converting identity");
    roundtrip->add_option("input", input, "arc-list file, or - for stdin");

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed())
            return run_check(input, require_canonical, as_json);
        if (normalize->parsed())
            return run_normalize(input, mode, strategy, as_json);
        if (convert->parsed())
            return run_convert(input, steps, augment, cap, dot, labels);
        if (classify->parsed())
            return run_classify(input, verify_steps, as_json);
        if (grow->parsed())
            return run_grow(input, steps, augment, cap);
        if (hamilton->parsed())
            return run_hamilton(input, list, oracle, bound);
        if (roundtrip->parsed())
            return run_roundtrip(input);
    } catch (const dgd::ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitOk;
}
