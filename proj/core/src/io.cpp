#include "cubix/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cubix {

namespace {

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open file: " + path);
    return f;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write file: " + path);
    f << content;
}

}  // namespace

QuadGMap load_qgm(std::istream& in) {
    std::string token;
    std::vector<std::string> tokens;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(strip_comment(line));
        while (ls >> token) tokens.push_back(token);
    }
    size_t pos = 0;
    auto expect = [&](const std::string& want) {
        if (pos >= tokens.size() || tokens[pos] != want)
            throw std::runtime_error("qgm parse error: expected '" + want + "'");
        ++pos;
    };
    auto next_int = [&]() -> long {
        if (pos >= tokens.size()) throw std::runtime_error("qgm parse error: unexpected end of input");
        try {
            return std::stol(tokens[pos++]);
        } catch (...) {
            throw std::runtime_error("qgm parse error: not an integer: " + tokens[pos - 1]);
        }
    };
    expect("qgm");
    if (next_int() != 1) throw std::runtime_error("qgm parse error: unsupported version");
    expect("darts");
    long n = next_int();
    if (n < 0) throw std::runtime_error("qgm parse error: negative dart count");
    QuadGMap g(static_cast<size_t>(n));
    for (const char* key : {"a0:", "a1:", "a2:"}) {
        expect(key);
        auto& arr = key[1] == '0' ? g.a0 : (key[1] == '1' ? g.a1 : g.a2);
        for (long i = 0; i < n; ++i) {
            long v = next_int();
            if (v < 0 || v >= n) throw std::runtime_error("qgm parse error: dart id out of range");
            arr[i] = static_cast<Dart>(v);
        }
    }
    if (pos != tokens.size()) throw std::runtime_error("qgm parse error: trailing tokens");
    ValidationReport r = validate(g);
    if (!r.ok) throw std::runtime_error("invalid cubication: " + r.to_string());
    return g;
}

QuadGMap load_qgm_file(const std::string& path) {
    auto f = open_or_throw(path);
    return load_qgm(f);
}

std::string save_qgm(const QuadGMap& g) {
    std::ostringstream os;
    os << "qgm 1\n";
    os << "darts " << g.n_darts() << "\n";
    for (int k = 0; k < 3; ++k) {
        os << "a" << k << ":";
        for (size_t d = 0; d < g.n_darts(); ++d) os << " " << g.alpha(k, static_cast<Dart>(d));
        os << "\n";
    }
    return os.str();
}

void save_qgm_file(const QuadGMap& g, const std::string& path) { write_file(path, save_qgm(g)); }

std::vector<std::vector<int>> load_cycles(std::istream& in) {
    std::vector<std::vector<int>> cycles;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(strip_comment(line));
        std::vector<int> cyc;
        int e;
        while (ls >> e) cyc.push_back(e);
        if (!cyc.empty()) cycles.push_back(std::move(cyc));
    }
    return cycles;
}

std::vector<std::vector<int>> load_cycles_file(const std::string& path) {
    auto f = open_or_throw(path);
    return load_cycles(f);
}

std::string save_cycles(const std::vector<std::vector<int>>& cycles) {
    std::ostringstream os;
    for (const auto& cyc : cycles) {
        for (size_t i = 0; i < cyc.size(); ++i) os << (i ? " " : "") << cyc[i];
        os << "\n";
    }
    return os.str();
}

void save_cycles_file(const std::vector<std::vector<int>>& cycles, const std::string& path) {
    write_file(path, save_cycles(cycles));
}

std::vector<FlipStep> load_flip_sequence(std::istream& in) {
    std::vector<FlipStep> seq;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(strip_comment(line));
        FlipStep step;
        long anchor;
        if (ls >> step.kind >> anchor) {
            if (anchor < 0) throw std::runtime_error("flip sequence: negative anchor");
            step.anchor = static_cast<Dart>(anchor);
            seq.push_back(step);
        }
    }
    return seq;
}

std::vector<FlipStep> load_flip_sequence_file(const std::string& path) {
    auto f = open_or_throw(path);
    return load_flip_sequence(f);
}

std::string save_flip_sequence(const std::vector<FlipStep>& seq) {
    std::ostringstream os;
    for (const auto& s : seq) os << s.kind << " " << s.anchor << "\n";
    return os.str();
}

void save_flip_sequence_file(const std::vector<FlipStep>& seq, const std::string& path) {
    write_file(path, save_flip_sequence(seq));
}

}  // namespace cubix
