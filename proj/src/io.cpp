#include "polyproj/io.hpp"

#include <fstream>
#include <sstream>

namespace polyproj {

namespace {

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> out;
    std::string t;
    while (is >> t) out.push_back(t);
    return out;
}

} // namespace

Model parse_model(std::istream& in) {
    std::string line;
    int lineno = 0;
    if (!std::getline(in, line)) throw ParseError(1, "missing header");
    ++lineno;
    auto head = tokens(line);
    if (head.size() != 4 || head[0] != "PDP") throw ParseError(lineno, "expected 'PDP <H|V> <rows> <cols>'");
    bool is_h;
    if (head[1] == "H") is_h = true;
    else if (head[1] == "V") is_h = false;
    else throw ParseError(lineno, "kind must be H or V");
    int rows, cols;
    try {
        rows = std::stoi(head[2]);
        cols = std::stoi(head[3]);
    } catch (const std::exception&) {
        throw ParseError(lineno, "bad row/column count");
    }
    if (rows < 0 || cols < 0) throw ParseError(lineno, "negative shape");

    RationalMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (!std::getline(in, line)) throw ParseError(lineno + 1, "unexpected end of file in matrix");
        ++lineno;
        auto ts = tokens(line);
        if (static_cast<int>(ts.size()) != cols)
            throw ParseError(lineno, "expected " + std::to_string(cols) + " entries");
        for (int j = 0; j < cols; ++j) {
            try {
                m.at(i, j) = parse_rational(ts[j]);
            } catch (const std::exception& e) {
                throw ParseError(lineno, e.what());
            }
        }
    }
    if (!is_h) {
        VPolytope v;
        v.v = m;
        return v;
    }
    if (!std::getline(in, line)) throw ParseError(lineno + 1, "missing 'b:' line");
    ++lineno;
    if (tokens(line) != std::vector<std::string>{"b:"}) throw ParseError(lineno, "expected 'b:'");
    std::vector<Rational> b;
    while (static_cast<int>(b.size()) < rows) {
        if (!std::getline(in, line)) throw ParseError(lineno + 1, "unexpected end of file in b");
        ++lineno;
        for (const auto& t : tokens(line)) {
            try {
                b.push_back(parse_rational(t));
            } catch (const std::exception& e) {
                throw ParseError(lineno, e.what());
            }
        }
    }
    if (static_cast<int>(b.size()) != rows) throw ParseError(lineno, "too many right-hand side entries");
    HPolytope h;
    h.a = m;
    h.b = std::move(b);
    return h;
}

Model parse_model_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return parse_model(in);
}

namespace {

void emit_matrix(std::ostream& os, const RationalMatrix& m) {
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j) os << ' ';
            os << to_string(m.at(i, j));
        }
        os << '\n';
    }
}

} // namespace

std::string emit_model(const HPolytope& h) {
    std::ostringstream os;
    os << "PDP H " << h.rows() << ' ' << h.ambient_dim() << '\n';
    emit_matrix(os, h.a);
    os << "b:\n";
    for (int i = 0; i < h.rows(); ++i) {
        if (i) os << ' ';
        os << to_string(h.b[i]);
    }
    os << '\n';
    return os.str();
}

std::string emit_model(const VPolytope& v) {
    std::ostringstream os;
    os << "PDP V " << v.size() << ' ' << v.ambient_dim() << '\n';
    emit_matrix(os, v.v);
    return os.str();
}

void write_model_file(const std::string& path, const Model& model) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    if (std::holds_alternative<HPolytope>(model))
        out << emit_model(std::get<HPolytope>(model));
    else
        out << emit_model(std::get<VPolytope>(model));
}

} // namespace polyproj
