#include "mbqc/pattern_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "mbqc/angle_expr.hpp"

namespace mbqc {

namespace {

[[noreturn]] void fail(int line, const std::string& what) {
    throw std::runtime_error("pattern line " + std::to_string(line) + ": " + what);
}

std::string strip_comment(const std::string& line) {
    const auto hash = line.find('#');
    return hash == std::string::npos ? line : line.substr(0, hash);
}

std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> tokens;
    std::string t;
    while (ss >> t) tokens.push_back(t);
    return tokens;
}

std::string format_angle(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

MeasurementPattern parse_pattern(std::istream& in,
                                 const std::map<std::string, double>& overrides) {
    std::map<std::string, double> params;
    std::map<int, NodeRole> roles;
    std::vector<std::pair<int, int>> edges;
    std::map<int, std::pair<std::string, std::string>> basis_exprs;
    std::map<int, int> basis_lines;
    std::vector<int> order;

    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto tokens = tokenize(strip_comment(raw));
        if (tokens.empty()) continue;
        const std::string& kind = tokens[0];
        try {
            if (kind == "param") {
                if (tokens.size() != 3) fail(line_no, "expected: param <name> <expr>");
                params[tokens[1]] = parse_angle(tokens[2], params);
            } else if (kind == "node") {
                if (tokens.size() != 3) fail(line_no, "expected: node <id> <role>");
                const int id = std::stoi(tokens[1]);
                NodeRole role;
                if (tokens[2] == "input") role = NodeRole::Input;
                else if (tokens[2] == "middle") role = NodeRole::Middle;
                else if (tokens[2] == "output") role = NodeRole::Output;
                else fail(line_no, "role must be input|middle|output");
                if (!roles.emplace(id, role).second) fail(line_no, "duplicate node id");
            } else if (kind == "edge") {
                if (tokens.size() != 3) fail(line_no, "expected: edge <id> <id>");
                edges.emplace_back(std::stoi(tokens[1]), std::stoi(tokens[2]));
            } else if (kind == "basis") {
                if (tokens.size() != 4) fail(line_no, "expected: basis <id> <theta> <phi>");
                const int id = std::stoi(tokens[1]);
                if (!basis_exprs.emplace(id, std::make_pair(tokens[2], tokens[3])).second) {
                    fail(line_no, "duplicate basis for node");
                }
                basis_lines[id] = line_no;
            } else if (kind == "order") {
                if (!order.empty()) fail(line_no, "duplicate order directive");
                for (std::size_t i = 1; i < tokens.size(); ++i) {
                    order.push_back(std::stoi(tokens[i]));
                }
            } else {
                fail(line_no, "unknown directive '" + kind + "'");
            }
        } catch (const std::invalid_argument&) {
            fail(line_no, "bad integer");
        } catch (const std::out_of_range&) {
            fail(line_no, "integer out of range");
        }
    }

    if (roles.empty()) throw std::runtime_error("pattern: no nodes declared");
    const int n = static_cast<int>(roles.size());
    std::vector<NodeRole> role_vec;
    for (int v = 0; v < n; ++v) {
        const auto it = roles.find(v);
        if (it == roles.end()) {
            throw std::runtime_error("pattern: node ids must be contiguous from 0");
        }
        role_vec.push_back(it->second);
    }

    for (const auto& [name, value] : overrides) params[name] = value;

    std::map<int, MeasurementBasis> bases;
    for (const auto& [id, exprs] : basis_exprs) {
        const int line = basis_lines[id];
        if (id < 0 || id >= n) fail(line, "basis for unknown node");
        try {
            bases.emplace(id, MeasurementBasis(parse_angle(exprs.first, params),
                                               parse_angle(exprs.second, params)));
        } catch (const std::runtime_error& e) {
            fail(line, e.what());
        }
    }

    try {
        return MeasurementPattern(std::move(role_vec), std::move(edges), std::move(bases),
                                  std::move(order));
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("pattern: ") + e.what());
    }
}

MeasurementPattern load_pattern_file(const std::string& path,
                                     const std::map<std::string, double>& overrides) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open pattern file: " + path);
    return parse_pattern(in, overrides);
}

std::string pattern_to_text(const MeasurementPattern& pattern) {
    std::ostringstream out;
    const char* role_names[] = {"input", "middle", "output"};
    for (int v = 0; v < pattern.node_count(); ++v) {
        out << "node " << v << ' ' << role_names[static_cast<int>(pattern.role(v))] << '\n';
    }
    for (const auto& [a, b] : pattern.edges()) {
        out << "edge " << a << ' ' << b << '\n';
    }
    for (int v = 0; v < pattern.node_count(); ++v) {
        if (pattern.role(v) == NodeRole::Output) continue;
        const auto& b = pattern.basis(v);
        out << "basis " << v << ' ' << format_angle(b.theta) << ' ' << format_angle(b.phi)
            << '\n';
    }
    out << "order";
    for (int v : pattern.measurement_order()) out << ' ' << v;
    out << '\n';
    return out.str();
}

}  // namespace mbqc
