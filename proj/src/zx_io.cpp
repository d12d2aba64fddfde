#include "mbqc/zx_io.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "mbqc/angle_expr.hpp"

namespace mbqc {

using mbqc::zx::SpiderColor;
using mbqc::zx::WireEnd;
using mbqc::zx::ZxDiagram;

namespace {

[[noreturn]] void fail(int line, const std::string& what) {
    throw std::runtime_error("zx line " + std::to_string(line) + ": " + what);
}

WireEnd parse_end(const std::string& token, int line) {
    auto index_after = [&](std::size_t prefix_len) {
        try {
            return std::stoi(token.substr(prefix_len));
        } catch (...) {
            fail(line, "bad wire end '" + token + "'");
        }
    };
    if (token.rfind("in", 0) == 0 && token.size() > 2 && std::isdigit((unsigned char)token[2])) {
        return WireEnd::input(index_after(2));
    }
    if (token.rfind("out", 0) == 0 && token.size() > 3 && std::isdigit((unsigned char)token[3])) {
        return WireEnd::output(index_after(3));
    }
    if (token.rfind("s", 0) == 0 && token.size() > 1 && std::isdigit((unsigned char)token[1])) {
        return WireEnd::spider(index_after(1));
    }
    fail(line, "wire end must be s<id>, in<k> or out<k>, got '" + token + "'");
}

}  // namespace

ZxDiagram parse_zx(std::istream& in, const std::map<std::string, double>& overrides) {
    std::map<std::string, double> params;
    struct SpiderDecl {
        SpiderColor color;
        std::string phase_expr;
        int line;
    };
    std::map<int, SpiderDecl> spider_decls;
    struct WireDecl {
        std::string a, b;
        bool h;
        int line;
    };
    std::vector<WireDecl> wire_decls;
    ZxDiagram d;

    std::string raw;
    int line_no = 0;
    bool have_inputs = false, have_outputs = false;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto hash = raw.find('#');
        std::istringstream ss(hash == std::string::npos ? raw : raw.substr(0, hash));
        std::vector<std::string> tokens;
        std::string t;
        while (ss >> t) tokens.push_back(t);
        if (tokens.empty()) continue;
        const std::string& kind = tokens[0];
        try {
            if (kind == "inputs") {
                if (tokens.size() != 2) fail(line_no, "expected: inputs <count>");
                d.n_inputs = std::stoi(tokens[1]);
                have_inputs = true;
            } else if (kind == "outputs") {
                if (tokens.size() != 2) fail(line_no, "expected: outputs <count>");
                d.n_outputs = std::stoi(tokens[1]);
                have_outputs = true;
            } else if (kind == "param") {
                if (tokens.size() != 3) fail(line_no, "expected: param <name> <expr>");
                params[tokens[1]] = parse_angle(tokens[2], params);
            } else if (kind == "spider") {
                if (tokens.size() != 4) fail(line_no, "expected: spider <id> <g|r> <phase>");
                const int id = std::stoi(tokens[1]);
                SpiderColor color;
                if (tokens[2] == "g") color = SpiderColor::Green;
                else if (tokens[2] == "r") color = SpiderColor::Red;
                else fail(line_no, "color must be g or r");
                if (!spider_decls.emplace(id, SpiderDecl{color, tokens[3], line_no}).second) {
                    fail(line_no, "duplicate spider id");
                }
            } else if (kind == "wire") {
                if (tokens.size() != 3 && tokens.size() != 4) {
                    fail(line_no, "expected: wire <end> <end> [h]");
                }
                bool h = false;
                if (tokens.size() == 4) {
                    if (tokens[3] != "h") fail(line_no, "wire flag must be h");
                    h = true;
                }
                wire_decls.push_back({tokens[1], tokens[2], h, line_no});
            } else if (kind == "scalar") {
                if (tokens.size() != 3) fail(line_no, "expected: scalar <re> <im>");
                d.scalar = cplx{parse_angle(tokens[1], params), parse_angle(tokens[2], params)};
            } else {
                fail(line_no, "unknown directive '" + kind + "'");
            }
        } catch (const std::invalid_argument&) {
            fail(line_no, "bad integer");
        } catch (const std::out_of_range&) {
            fail(line_no, "integer out of range");
        }
    }
    if (!have_inputs || !have_outputs) {
        throw std::runtime_error("zx: missing inputs/outputs declaration");
    }

    for (const auto& [name, value] : overrides) params[name] = value;

    const int n = static_cast<int>(spider_decls.size());
    for (int id = 0; id < n; ++id) {
        const auto it = spider_decls.find(id);
        if (it == spider_decls.end()) {
            throw std::runtime_error("zx: spider ids must be contiguous from 0");
        }
        try {
            d.add_spider(it->second.color, parse_angle(it->second.phase_expr, params));
        } catch (const std::runtime_error& e) {
            fail(it->second.line, e.what());
        }
    }
    for (const auto& w : wire_decls) {
        d.connect(parse_end(w.a, w.line), parse_end(w.b, w.line), w.h);
    }
    try {
        d.validate();
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("zx: ") + e.what());
    }
    return d;
}

ZxDiagram load_zx_file(const std::string& path, const std::map<std::string, double>& overrides) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open zx file: " + path);
    return parse_zx(in, overrides);
}

std::string zx_to_text(const ZxDiagram& d) {
    std::ostringstream out;
    out << "inputs " << d.n_inputs << '\n';
    out << "outputs " << d.n_outputs << '\n';
    char buf[48];
    for (std::size_t i = 0; i < d.spiders.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g", d.spiders[i].phase);
        out << "spider " << i << ' '
            << (d.spiders[i].color == SpiderColor::Green ? 'g' : 'r') << ' ' << buf << '\n';
    }
    auto end_name = [](const WireEnd& e) {
        switch (e.kind) {
            case WireEnd::Kind::Spider: return "s" + std::to_string(e.index);
            case WireEnd::Kind::Input: return "in" + std::to_string(e.index);
            case WireEnd::Kind::Output: return "out" + std::to_string(e.index);
        }
        return std::string("?");
    };
    for (const auto& w : d.wires) {
        out << "wire " << end_name(w.a) << ' ' << end_name(w.b) << (w.hadamard ? " h" : "")
            << '\n';
    }
    if (d.scalar != cplx{1.0, 0.0}) {
        char re[48], im[48];
        std::snprintf(re, sizeof re, "%.17g", d.scalar.real());
        std::snprintf(im, sizeof im, "%.17g", d.scalar.imag());
        out << "scalar " << re << ' ' << im << '\n';
    }
    return out.str();
}

}  // namespace mbqc
