#include "dgd/io.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

namespace dgd {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

bool parse_int(std::string_view s, int& out) {
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && p == s.data() + s.size();
}

}  // namespace

Digraph parse_arc_list(std::string_view text) {
    int declared_n = -1;
    std::vector<std::pair<int, int>> arcs;
    std::map<int, std::string> labels;
    int max_vertex = -1;

    int lineno = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t eol = text.find('\n', pos);
        std::string_view raw = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                              : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++lineno;
        std::string_view line = trim(raw);
        if (line.empty())
            continue;
        if (line.front() == '#') {
            std::string_view rest = trim(line.substr(1));
            if (rest.rfind("n=", 0) == 0) {
                int n = 0;
                if (!parse_int(trim(rest.substr(2)), n) || n < 0)
                    throw ParseError(lineno, "bad vertex count header");
                if (declared_n >= 0)
                    throw ParseError(lineno, "duplicate vertex count header");
                declared_n = n;
            }
            continue;  // any other '#' line is a comment
        }
        std::istringstream in{std::string(line)};
        std::string first;
        in >> first;
        if (first == "label") {
            int id = 0;
            std::string id_str;
            in >> id_str;
            if (!parse_int(id_str, id) || id < 0)
                throw ParseError(lineno, "bad label vertex id");
            std::string rest;
            std::getline(in, rest);
            std::string name{trim(rest)};
            if (name.empty())
                throw ParseError(lineno, "empty label");
            if (!labels.emplace(id, name).second)
                throw ParseError(lineno, "duplicate label for vertex " + std::to_string(id));
            max_vertex = std::max(max_vertex, id);
            continue;
        }
        int tail = 0, head = 0;
        std::string second;
        in >> second;
        std::string extra;
        if (!parse_int(first, tail) || !parse_int(second, head) || (in >> extra))
            throw ParseError(lineno, "expected 'tail head'");
        if (tail < 0 || head < 0)
            throw ParseError(lineno, "negative vertex id");
        if (tail == head)
            throw ParseError(lineno, "self-loop at vertex " + std::to_string(tail));
        if (declared_n >= 0 && (tail >= declared_n || head >= declared_n))
            throw ParseError(lineno, "arc endpoint beyond declared vertex count");
        arcs.emplace_back(tail, head);
        max_vertex = std::max({max_vertex, tail, head});
    }

    int n = declared_n >= 0 ? declared_n : max_vertex + 1;
    if (max_vertex >= n)
        throw ParseError(lineno, "label vertex id beyond declared vertex count");

    std::vector<std::string> label_vec;
    if (!labels.empty()) {
        label_vec.resize(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) {
            auto it = labels.find(v);
            label_vec[static_cast<size_t>(v)] = it != labels.end() ? it->second : std::to_string(v);
        }
    }
    try {
        return build_digraph(n, arcs, std::move(label_vec));
    } catch (const std::invalid_argument& e) {
        throw ParseError(lineno, e.what());
    }
}

std::string emit_arc_list(const Digraph& g) {
    std::string out = "# n=" + std::to_string(g.order()) + "\n";
    if (g.labeled())
        for (VertexId v = 0; v < g.order(); ++v)
            out += "label " + std::to_string(v) + " " + g.label(v) + "\n";
    for (const Arc& a : g.arcs())
        out += std::to_string(a.tail) + " " + std::to_string(a.head) + "\n";
    return out;
}

std::string to_dot(const Digraph& g, std::string_view name) {
    std::string out = "digraph ";
    out += name;
    out += " {\n";
    for (VertexId v = 0; v < g.order(); ++v) {
        out += "  " + std::to_string(v);
        if (g.labeled()) {
            std::string esc;
            for (char c : g.label(v)) {
                if (c == '"' || c == '\\')
                    esc += '\\';
                esc += c;
            }
            out += " [label=\"" + esc + "\"]";
        }
        out += ";\n";
    }
    for (const Arc& a : g.arcs())
        out += "  " + std::to_string(a.tail) + " -> " + std::to_string(a.head) + ";\n";
    out += "}\n";
    return out;
}

std::string csv_field(std::string_view s) {
    bool needs_quote = s.find_first_of(",\"\n") != std::string_view::npos;
    if (!needs_quote)
        return std::string(s);
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

json to_json(const Digraph& g) {
    json j;
    j["n"] = g.order();
    json arcs = json::array();
    for (const Arc& a : g.arcs())
        arcs.push_back(json::array({a.tail, a.head}));
    j["arcs"] = std::move(arcs);
    if (g.labeled())
        j["labels"] = g.labels();
    return j;
}

json to_json(const FValidityReport& r) {
    json j;
    j["ok"] = r.ok;
    json vs = json::array();
    for (const FViolation& v : r.violations) {
        json e;
        e["rule"] = v.rule;
        e["description"] = v.description;
        e["witnesses"] = v.witnesses;
        vs.push_back(std::move(e));
    }
    j["violations"] = std::move(vs);
    return j;
}

json to_json(const DualityVerdict& v) {
    json j;
    j["quasi_canonical"] = v.quasi_canonical;
    j["canonical"] = v.canonical;
    json viol = json::array();
    for (const ArcViolation& a : v.violating_arcs) {
        json e;
        e["tail"] = a.tail;
        e["head"] = a.head;
        e["reason"] = a.reason;
        viol.push_back(std::move(e));
    }
    j["violating_arcs"] = std::move(viol);
    json minors = json::array();
    for (const Arc& a : v.minor_failures)
        minors.push_back(json::array({a.tail, a.head}));
    j["minor_failures"] = std::move(minors);
    j["conditions_disagree"] = v.conditions_disagree;
    return j;
}

json to_json(const NormalizationReport& r) {
    json j;
    j["converged"] = r.converged;
    j["s_q"] = r.s_q;
    j["rounds"] = r.rounds;
    json steps = json::array();
    for (const SubdivisionStep& s : r.steps) {
        json e;
        e["arc"] = json::array({s.arc.tail, s.arc.head});
        e["new_vertex"] = s.new_vertex;
        steps.push_back(std::move(e));
    }
    j["steps"] = std::move(steps);
    j["result"] = to_json(r.result.graph);
    if (!r.notes.empty())
        j["notes"] = r.notes;
    return j;
}

json to_json(const L31Interval& iv) {
    json j;
    j["start"] = iv.start;
    j["end"] = iv.end;
    j["length"] = iv.length;
    j["path"] = iv.path;
    return j;
}

json to_json(const ClassReport& r) {
    json j;
    j["class"] = to_string(r.cls);
    j["description"] = class_description(r.cls);
    j["contours"] = r.contours;
    json ivs = json::array();
    for (const L31Interval& iv : r.intervals)
        ivs.push_back(to_json(iv));
    j["intervals"] = std::move(ivs);
    if (r.j_max)
        j["j_max"] = *r.j_max;
    if (!r.predicted_growth.empty())
        j["predicted_growth"] = r.predicted_growth;
    j["standing_ok"] = r.standing_ok;
    if (!r.standing_violations.empty()) {
        FValidityReport f;
        f.ok = false;
        f.violations = r.standing_violations;
        j["standing_violations"] = to_json(f)["violations"];
    }
    if (r.pure_contour_degenerate)
        j["pure_contour_degenerate"] = true;
    return j;
}

json trace_to_json(const ConvertTrace& t) {
    json j;
    json steps = json::array();
    for (const ConvertStep& s : t.steps) {
        json e;
        e["step"] = s.index;
        e["n"] = s.n;
        e["m"] = s.m;
        e["nu"] = s.nu;
        e["delta_nu"] = s.delta_nu;
        e["augmented"] = s.augmented;
        steps.push_back(std::move(e));
    }
    j["steps"] = std::move(steps);
    j["capped"] = t.capped;
    if (t.capped)
        j["predicted_next"] = t.predicted_next;
    return j;
}

}  // namespace dgd
