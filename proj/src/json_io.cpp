#include "cqv/json_io.hpp"

#include <sstream>

#include "cqv/error.hpp"

namespace cqv {

json to_json(const Partition& mu) { return json(mu.parts()); }

json to_json(const Multipartition& la) {
    json a = json::array();
    for (const auto& c : la.components()) a.push_back(to_json(c));
    return a;
}

json to_json(const Cell& c) { return json::array({c.row, c.col}); }

json to_json(const FrobeniusForm& f) { return json{{"arms", f.arms}, {"legs", f.legs}}; }

json to_json(const LaurentPoly& p) {
    json a = json::array();
    for (const auto& [e, c] : p.terms())
        a.push_back(json::array({e, c.get_num().get_str(), c.get_den().get_str()}));
    return a;
}

json to_json(const BeadDiagram& b) {
    json rows = json::array();
    for (const auto& r : b.rows) {
        json row = json::array();
        for (bool x : r) row.push_back(x ? 1 : 0);
        rows.push_back(row);
    }
    return rows;
}

namespace {

json rational(const Rational& q) {
    if (q.get_den() == 1) return json(q.get_num().get_si());
    return json(q.get_str());
}

template <class F>
json form(const F& f) {
    json a = json::array({rational(f.constant())});
    for (std::size_t i = 0; i < f.arity(); ++i) a.push_back(rational(f.coeff(i)));
    return a;
}

}  // namespace

json to_json(const AffineForm& f) { return form(f); }
json to_json(const ParamBasisForm& f) { return form(f); }

json to_json(const Matrix<AffineForm>& m) {
    json rows = json::array();
    for (std::size_t p = 0; p < m.rows(); ++p) {
        json row = json::array();
        for (std::size_t q = 0; q < m.cols(); ++q) row.push_back(to_json(m(p, q)));
        rows.push_back(row);
    }
    return rows;
}

json to_json(const SymbolicRep& rep) {
    json blocks = json::array();
    for (const auto& b : rep.blocks) blocks.push_back(json{{"m", b.m}, {"r", b.r}, {"q", b.q}});
    return json{{"mu", to_json(rep.mu)}, {"l", rep.l},     {"blocks", blocks},      {"psi", rep.psi},
                {"Lambda", to_json(rep.X)}, {"A", to_json(rep.Y)}, {"I", to_json(rep.I)}, {"J", to_json(rep.J)}};
}

json to_json(const SymbolicMonomialSum& s) {
    json a = json::array();
    for (const auto& [f, k] : s) a.push_back(json{{"exponent", to_json(f)}, {"multiplicity", k}});
    return a;
}

json to_json(const GeneratorWord& w) { return json(w); }

namespace {

std::vector<long> parse_ints(const std::string& text) {
    std::vector<long> out;
    if (text.empty() || text == "-" || text == "∅" || text == "0") return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(item, &used);
        } catch (const std::exception&) {
            throw Error(ErrorCode::InvalidArgument, "not an integer: '" + item + "'");
        }
        if (used != item.size()) throw Error(ErrorCode::InvalidArgument, "not an integer: '" + item + "'");
        out.push_back(v);
    }
    return out;
}

}  // namespace

Partition parse_partition(const std::string& text) { return Partition(parse_ints(text)); }

Multipartition parse_multipartition(const std::string& text) {
    std::vector<Partition> comps;
    std::size_t start = 0;
    for (;;) {
        std::size_t slash = text.find('/', start);
        comps.push_back(parse_partition(text.substr(start, slash == std::string::npos ? std::string::npos : slash - start)));
        if (slash == std::string::npos) break;
        start = slash + 1;
    }
    return Multipartition(comps);
}

GeneratorWord parse_word(const std::string& text) {
    GeneratorWord w;
    for (long v : parse_ints(text)) w.push_back(static_cast<int>(v));
    return w;
}

}  // namespace cqv
