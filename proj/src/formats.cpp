#include "pg/formats.hpp"

#include <fstream>
#include <sstream>

namespace pg {

namespace {

std::string strip(const std::string& line) {
    auto hash = line.find('#');
    std::string s = hash == std::string::npos ? line : line.substr(0, hash);
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

} // namespace

RotationDocument parse_rotation(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& msg) {
        throw FormatError(FormatError::Kind::Syntax,
                          "line " + std::to_string(lineno) + ": " + msg);
    };

    bool saw_header = false;
    int n = -1;
    std::vector<std::vector<int>> rotation;
    std::vector<char> defined;
    std::optional<std::vector<int>> outer;

    while (std::getline(in, line)) {
        ++lineno;
        std::string s = strip(line);
        if (s.empty()) continue;
        if (!saw_header) {
            if (s != "pgraph v1") fail("expected header 'pgraph v1'");
            saw_header = true;
            continue;
        }
        if (n < 0) {
            std::istringstream ls(s);
            std::string kw;
            ls >> kw;
            if (kw != "n") fail("expected 'n <count>'");
            if (!(ls >> n) || n <= 0) fail("bad vertex count");
            rotation.assign(n, {});
            defined.assign(n, 0);
            continue;
        }
        if (s.rfind("outer:", 0) == 0) {
            std::istringstream ls(s.substr(6));
            std::vector<int> cyc;
            int v;
            while (ls >> v) {
                if (v < 1 || v > n) fail("outer vertex out of range");
                cyc.push_back(v - 1);
            }
            if (cyc.size() < 3) fail("outer cycle needs at least 3 vertices");
            outer = cyc;
            continue;
        }
        auto colon = s.find(':');
        if (colon == std::string::npos) fail("expected '<v>: <neighbors>'");
        int v;
        try {
            v = std::stoi(s.substr(0, colon));
        } catch (...) {
            fail("bad vertex id");
            return {};
        }
        if (v < 1 || v > n) fail("vertex id out of range");
        if (defined[v - 1]) fail("vertex " + std::to_string(v) + " defined twice");
        defined[v - 1] = 1;
        std::istringstream ls(s.substr(colon + 1));
        int w;
        while (ls >> w) {
            if (w < 1 || w > n) fail("neighbor out of range");
            rotation[v - 1].push_back(w - 1);
        }
        if (!ls.eof()) fail("bad neighbor list");
    }
    if (!saw_header) throw FormatError(FormatError::Kind::Syntax, "missing 'pgraph v1' header");
    if (n < 0) throw FormatError(FormatError::Kind::Syntax, "missing 'n <count>' line");
    for (int v = 0; v < n; ++v)
        if (!defined[v])
            throw FormatError(FormatError::Kind::Syntax,
                              "vertex " + std::to_string(v + 1) + " has no rotation line");

    RotationDocument doc{PlaneGraph::build_from_rotation(rotation), outer};
    return doc;
}

std::string write_rotation(const PlaneGraph& g, const std::vector<int>* outer) {
    std::ostringstream out;
    out << "pgraph v1\n";
    out << "n " << g.vertex_count() << "\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        out << (v + 1) << ":";
        for (int w : g.rotation(v)) out << " " << (w + 1);
        out << "\n";
    }
    if (outer) {
        out << "outer:";
        for (int v : *outer) out << " " << (v + 1);
        out << "\n";
    }
    return out.str();
}

std::vector<PlaneGraph> read_planar_code(const std::vector<std::uint8_t>& bytes) {
    size_t at = 0;
    static const std::string header = ">>planar_code<<";
    if (bytes.size() >= header.size() &&
        std::equal(header.begin(), header.end(), bytes.begin())) {
        at = header.size();
    } else if (!bytes.empty() && bytes[0] == '>') {
        throw FormatError(FormatError::Kind::BadHeader, "unrecognized planar_code header");
    }

    std::vector<PlaneGraph> graphs;
    while (at < bytes.size()) {
        int n = bytes[at++];
        if (n == 0) throw FormatError(FormatError::Kind::TruncatedStream, "zero vertex count");
        std::vector<std::vector<int>> rot(n);
        for (int v = 0; v < n; ++v) {
            while (true) {
                if (at >= bytes.size())
                    throw FormatError(FormatError::Kind::TruncatedStream,
                                      "stream ends inside a neighbor list");
                int b = bytes[at++];
                if (b == 0) break;
                rot[v].push_back(b - 1);
            }
        }
        graphs.push_back(PlaneGraph::build_from_rotation(rot));
    }
    return graphs;
}

std::vector<std::uint8_t> write_planar_code(const std::vector<PlaneGraph>& graphs) {
    static const std::string header = ">>planar_code<<";
    std::vector<std::uint8_t> out(header.begin(), header.end());
    for (const auto& g : graphs) {
        if (g.vertex_count() > 255)
            throw FormatError(FormatError::Kind::Syntax, "planar_code holds at most 255 vertices");
        out.push_back(static_cast<std::uint8_t>(g.vertex_count()));
        for (int v = 0; v < g.vertex_count(); ++v) {
            for (int w : g.rotation(v)) out.push_back(static_cast<std::uint8_t>(w + 1));
            out.push_back(0);
        }
    }
    return out;
}

std::string read_file_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::uint8_t> read_file_bytes(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<std::uint8_t> out((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
    return out;
}

void write_file_bytes(const std::string& path, const std::vector<std::uint8_t>& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

} // namespace pg
