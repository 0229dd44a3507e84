#include "autfn/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "autfn/errors.hpp"

namespace autfn {

namespace {

// Content lines (trimmed), skipping blanks and '#' comments.
std::vector<std::string> content_lines(std::string_view text) {
    std::vector<std::string> out;
    std::string line;
    std::istringstream in{std::string(text)};
    while (std::getline(in, line)) {
        std::size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        std::size_t b = line.find_last_not_of(" \t\r");
        std::string trimmed = line.substr(a, b - a + 1);
        if (trimmed.empty() || trimmed[0] == '#') continue;
        out.push_back(std::move(trimmed));
    }
    return out;
}

std::vector<long long> parse_ints(const std::string& line, const char* what) {
    std::istringstream in(line);
    std::vector<long long> out;
    std::string tok;
    while (in >> tok) {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(tok, &used);
        } catch (...) {
            used = 0;
        }
        if (used != tok.size())
            throw InputError(std::string(what) + ": non-numeric token '" + tok +
                             "' in line '" + line + "'");
        out.push_back(v);
    }
    return out;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open file: " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

}  // namespace

Complex parse_complex(std::string_view text) {
    std::vector<std::string> lines = content_lines(text);
    if (lines.size() < 2)
        throw InputError("complex file: expected 'dim' and 'vertices' header lines");

    auto parse_header = [&](const std::string& line, const std::string& keyword) {
        std::istringstream in(line);
        std::string word;
        long long value;
        if (!(in >> word >> value) || word != keyword || value < 0)
            throw InputError("complex file: expected '" + keyword + " <count>', got '" +
                             line + "'");
        return static_cast<int>(value);
    };
    int declared_dim = parse_header(lines[0], "dim");
    int vertex_count = parse_header(lines[1], "vertices");

    std::vector<Simplex> maximal;
    for (std::size_t i = 2; i < lines.size(); ++i) {
        std::vector<long long> vs = parse_ints(lines[i], "complex file");
        if (vs.empty()) continue;
        Simplex s;
        s.reserve(vs.size());
        for (long long v : vs) s.push_back(static_cast<int>(v));
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw InputError("complex file: repeated vertex in simplex '" + lines[i] + "'");
        maximal.push_back(std::move(s));
    }
    if (maximal.empty()) throw InputError("complex file: no simplices");
    return Complex::from_maximal(vertex_count, std::move(maximal), declared_dim);
}

std::vector<Perm> parse_action(std::string_view text, int vertex_count) {
    std::vector<Perm> out;
    for (const std::string& line : content_lines(text)) {
        std::vector<long long> vs = parse_ints(line, "action file");
        Perm p;
        p.reserve(vs.size());
        for (long long v : vs) p.push_back(static_cast<int>(v));
        if (!perm_valid(p, vertex_count))
            throw InputError("action file: line '" + line +
                             "' is not a permutation of 0.." +
                             std::to_string(vertex_count - 1));
        out.push_back(std::move(p));
    }
    if (out.empty()) throw InputError("action file: no generators");
    return out;
}

std::map<Simplex, int> parse_orientation(std::string_view text) {
    std::map<Simplex, int> out;
    for (const std::string& line : content_lines(text)) {
        std::vector<long long> vs = parse_ints(line, "orientation file");
        if (vs.size() < 2)
            throw InputError("orientation file: expected '<sign> v0 v1 ...', got '" +
                             line + "'");
        long long sign = vs[0];
        if (sign != 1 && sign != -1)
            throw InputError("orientation file: sign must be +1 or -1 in '" + line + "'");
        std::vector<int> listed(vs.begin() + 1, vs.end());
        // Parity of the listed order relative to ascending order.
        int parity = 1;
        for (std::size_t i = 0; i < listed.size(); ++i)
            for (std::size_t j = i + 1; j < listed.size(); ++j) {
                if (listed[i] == listed[j])
                    throw InputError("orientation file: repeated vertex in '" + line + "'");
                if (listed[i] > listed[j]) parity = -parity;
            }
        Simplex s = listed;
        std::sort(s.begin(), s.end());
        if (!out.emplace(std::move(s), static_cast<int>(sign) * parity).second)
            throw InputError("orientation file: duplicate simplex in '" + line + "'");
    }
    return out;
}

Complex load_complex(const std::string& path) { return parse_complex(slurp(path)); }

std::vector<Perm> load_action(const std::string& path, int vertex_count) {
    return parse_action(slurp(path), vertex_count);
}

void load_orientation(Complex& c, const std::string& path) {
    c.set_orientation(parse_orientation(slurp(path)));
}

}  // namespace autfn
