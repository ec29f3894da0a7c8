#include "torrig/orbit_io.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "torrig/errors.hpp"

namespace torrig {
namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> tokens(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
}

bool looks_like_integer(const std::string& s) {
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

long long parse_int(const std::string& tok, int line, const char* what) {
    if (tok.empty() || !looks_like_integer(tok))
        throw parse_error(std::string(what) + " must be an integer, got '" + tok + "'", line);
    try {
        return std::stoll(tok);
    } catch (const std::exception&) {
        throw parse_error(std::string(what) + " out of range: '" + tok + "'", line);
    }
}

Int parse_gain_entry(const std::string& tok, int line) {
    if (tok.empty() || !looks_like_integer(tok))
        throw parse_error("gain entry must be an integer, got '" + tok + "'", line);
    // base 10 always: the auto-detecting constructor would read a leading
    // zero as octal
    return Int(tok, 10);
}

Rat parse_rat_at(const std::string& tok, int line, bool allow_decimal) {
    try {
        return parse_rational(tok, allow_decimal);
    } catch (const parse_error& pe) {
        throw parse_error(pe.what(), line);
    }
}

}  // namespace

Torus OrbitGraphDocument::torus() const {
    return has_lattice ? Torus{graph.d, lattice} : Torus::unit(graph.d);
}

OrbitFramework OrbitGraphDocument::framework(bool allow_degenerate) const {
    // A vertex-free document has a complete (empty) position list.
    if (!has_positions && graph.n > 0)
        throw structure_error("document has no positions; cannot build a framework");
    OrbitFramework f{graph, torus(), positions};
    f.validate(allow_degenerate);
    return f;
}

OrbitGraphDocument parse_document(const std::string& text, bool allow_decimal) {
    OrbitGraphDocument doc;
    int d = -1;
    int n = -1;
    std::vector<QVec> lattice_rows;
    std::vector<char> has_position;

    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = raw.substr(0, raw.find('#'));
        line = trim(line);
        if (line.empty()) continue;
        std::vector<std::string> tok = tokens(line);
        const std::string& key = tok[0];

        if (key == "name" || key == "comment") {
            std::string value = trim(line.substr(key.size()));
            if (value.empty())
                throw parse_error("'" + key + "' needs a value", line_no);
            (key == "name" ? doc.name : doc.comment) = value;
        } else if (key == "d") {
            if (d >= 0) throw parse_error("duplicate 'd' declaration", line_no);
            if (tok.size() != 2) throw parse_error("'d' takes one integer", line_no);
            long long v = parse_int(tok[1], line_no, "dimension");
            if (v < 1 || v > 32) throw parse_error("dimension must be in [1, 32]", line_no);
            d = static_cast<int>(v);
        } else if (key == "vertices") {
            if (n >= 0) throw parse_error("duplicate 'vertices' declaration", line_no);
            if (tok.size() != 2) throw parse_error("'vertices' takes one integer", line_no);
            long long v = parse_int(tok[1], line_no, "vertex count");
            if (v < 0 || v > 1000000) throw parse_error("vertex count out of range", line_no);
            n = static_cast<int>(v);
            has_position.assign(static_cast<std::size_t>(n), 0);
        } else if (key == "lattice") {
            if (d < 0) throw parse_error("'lattice' before 'd'", line_no);
            if (static_cast<int>(lattice_rows.size()) == d)
                throw parse_error("more than " + std::to_string(d) + " lattice rows", line_no);
            if (static_cast<int>(tok.size()) != d + 1)
                throw parse_error("lattice row needs " + std::to_string(d) + " entries", line_no);
            QVec row;
            for (int c = 0; c < d; ++c)
                row.push_back(parse_rat_at(tok[1 + c], line_no, allow_decimal));
            lattice_rows.push_back(row);
        } else if (key == "edge") {
            if (d < 0 || n < 0) throw parse_error("'edge' before 'd'/'vertices'", line_no);
            if (static_cast<int>(tok.size()) != 3 + d)
                throw parse_error("edge needs tail, head, and " + std::to_string(d) +
                                      " gain entries",
                                  line_no);
            long long t = parse_int(tok[1], line_no, "edge tail");
            long long h = parse_int(tok[2], line_no, "edge head");
            if (t < 1 || t > n || h < 1 || h > n)
                throw parse_error("edge endpoint outside [1, " + std::to_string(n) + "]",
                                  line_no);
            Edge e;
            e.tail = static_cast<int>(t) - 1;
            e.head = static_cast<int>(h) - 1;
            for (int c = 0; c < d; ++c)
                e.gain.push_back(parse_gain_entry(tok[3 + c], line_no));
            doc.graph.edges.push_back(e);
        } else if (key == "position") {
            if (d < 0 || n < 0) throw parse_error("'position' before 'd'/'vertices'", line_no);
            if (static_cast<int>(tok.size()) != 2 + d)
                throw parse_error("position needs a vertex id and " + std::to_string(d) +
                                      " coordinates",
                                  line_no);
            long long v = parse_int(tok[1], line_no, "position vertex");
            if (v < 1 || v > n)
                throw parse_error("position vertex outside [1, " + std::to_string(n) + "]",
                                  line_no);
            if (has_position[static_cast<std::size_t>(v - 1)])
                throw parse_error("duplicate position for vertex " + std::to_string(v),
                                  line_no);
            has_position[static_cast<std::size_t>(v - 1)] = 1;
            if (doc.positions.empty()) doc.positions.resize(static_cast<std::size_t>(n));
            QVec& p = doc.positions[static_cast<std::size_t>(v - 1)];
            for (int c = 0; c < d; ++c)
                p.push_back(parse_rat_at(tok[2 + c], line_no, allow_decimal));
        } else {
            throw parse_error("unknown keyword '" + key + "'", line_no);
        }
    }

    if (d < 0) throw parse_error("missing 'd' declaration");
    if (n < 0) throw parse_error("missing 'vertices' declaration");
    doc.graph.d = d;
    doc.graph.n = n;
    doc.graph.validate();

    if (!lattice_rows.empty()) {
        if (static_cast<int>(lattice_rows.size()) != d)
            throw parse_error("expected " + std::to_string(d) + " lattice rows, got " +
                              std::to_string(lattice_rows.size()));
        doc.has_lattice = true;
        doc.lattice = QMat(d, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) doc.lattice(i, j) = lattice_rows[i][j];
        doc.torus().validate();  // rejects singular lattices
    }

    if (!doc.positions.empty()) {
        for (int v = 0; v < n; ++v)
            if (!has_position[static_cast<std::size_t>(v)])
                throw parse_error("missing position for vertex " + std::to_string(v + 1));
        doc.has_positions = true;
    }
    return doc;
}

std::string write_document(const OrbitGraphDocument& doc) {
    std::ostringstream out;
    if (!doc.name.empty()) out << "name " << doc.name << "\n";
    if (!doc.comment.empty()) out << "comment " << doc.comment << "\n";
    out << "d " << doc.graph.d << "\n";
    out << "vertices " << doc.graph.n << "\n";
    if (doc.has_lattice) {
        for (int i = 0; i < doc.graph.d; ++i) {
            out << "lattice";
            for (int j = 0; j < doc.graph.d; ++j)
                out << ' ' << rat_to_string(doc.lattice(i, j));
            out << "\n";
        }
    }
    for (const Edge& e : doc.graph.edges) {
        out << "edge " << e.tail + 1 << ' ' << e.head + 1;
        for (const Int& g : e.gain) out << ' ' << g.get_str();
        out << "\n";
    }
    if (doc.has_positions) {
        for (int v = 0; v < doc.graph.n; ++v) {
            out << "position " << v + 1;
            for (const Rat& c : doc.positions[static_cast<std::size_t>(v)])
                out << ' ' << rat_to_string(c);
            out << "\n";
        }
    }
    return out.str();
}

OrbitGraphDocument load_document(const std::string& path, bool allow_decimal) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_document(buf.str(), allow_decimal);
}

void save_document(const OrbitGraphDocument& doc, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw parse_error("cannot write file: " + path);
    out << write_document(doc);
}

}  // namespace torrig
