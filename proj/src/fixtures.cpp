#include "tencode/fixtures.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace tencode {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::vector<long> entries_of(const std::string& group) {
    std::string g = trim(group);
    std::vector<long> out;
    if (g.find_first_of(" \t,") != std::string::npos) {
        std::string tok;
        std::istringstream in(g);
        while (in >> tok) {
            for (auto& piece : split(tok, ','))
                if (!piece.empty()) out.push_back(std::stol(piece));
        }
    } else {
        for (char c : g) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw std::invalid_argument(std::string("display: unexpected character '") + c + "'");
            out.push_back(c - '0');
        }
    }
    return out;
}

Elem to_elem(const Field& f, long v) {
    if (v < 0 || v >= f.q()) throw std::invalid_argument("display: entry out of range");
    return static_cast<Elem>(v);
}

} // namespace

Tensor parse_display(const FieldPtr& f, const Dims& dims, const std::string& text) {
    if (dims.size() != 2 && dims.size() != 3) throw std::invalid_argument("display: order must be 2 or 3");
    Tensor x = Tensor::zeros(f, dims);
    auto rows = split(text, ';');
    if (rows.size() != dims[0]) throw std::invalid_argument("display: wrong number of rows");
    for (std::size_t i = 0; i < dims[0]; ++i) {
        if (dims.size() == 2) {
            auto e = entries_of(rows[i]);
            if (e.size() != dims[1]) throw std::invalid_argument("display: wrong row length");
            for (std::size_t j = 0; j < dims[1]; ++j) x.set({i, j}, to_elem(*f, e[j]));
            continue;
        }
        auto slices = split(rows[i], '|');
        if (slices.size() != dims[2]) throw std::invalid_argument("display: wrong number of slices");
        for (std::size_t s = 0; s < dims[2]; ++s) {
            auto e = entries_of(slices[s]);
            if (e.size() != dims[1]) throw std::invalid_argument("display: wrong slice width");
            for (std::size_t j = 0; j < dims[1]; ++j) x.set({i, j, s}, to_elem(*f, e[j]));
        }
    }
    return x;
}

std::string format_display(const Tensor& x) {
    const Dims& d = x.dims();
    if (d.size() != 2 && d.size() != 3) throw std::invalid_argument("display: order must be 2 or 3");
    std::ostringstream os;
    for (std::size_t i = 0; i < d[0]; ++i) {
        if (i) os << " ; ";
        std::size_t slices = d.size() == 3 ? d[2] : 1;
        for (std::size_t s = 0; s < slices; ++s) {
            if (s) os << "|";
            for (std::size_t j = 0; j < d[1]; ++j) {
                if (j) os << ' ';
                os << int(d.size() == 3 ? x.at({i, j, s}) : x.at({i, j}));
            }
        }
    }
    return os.str();
}

Vec parse_vec(const FieldPtr& f, const std::string& text) {
    Vec v;
    for (long e : entries_of(text)) v.push_back(to_elem(*f, e));
    return v;
}

Subspace span_of(const FieldPtr& f, std::size_t n, const std::vector<std::string>& rows) {
    Matrix m;
    for (const auto& r : rows) {
        m.push_back(parse_vec(f, r));
        if (m.back().size() != n) throw std::invalid_argument("span_of: wrong vector length");
    }
    return Subspace(f, n, m);
}

Elem alpha_power(const Field& f, int e) {
    return f.pow(f.generator(), static_cast<std::uint64_t>(e));
}

namespace fixtures {

ClosureExample closure_example() {
    auto f = Field::prime(3);
    Dims dims{2, 3, 4};
    auto x = parse_display(f, dims, "2 1 1|2 1 0|0 0 1|2 1 0 ; 0 0 0|0 0 0|0 0 0|0 0 0");
    auto y = parse_display(f, dims, "0 0 0|0 0 0|0 0 0|0 0 0 ; 1 2 1|1 1 0|2 2 0|2 0 1");
    auto z = parse_display(f, dims, "2 0 2|1 0 2|1 0 1|2 0 2 ; 2 0 1|0 0 0|1 0 2|2 0 1");
    ClosureExample ex{f, dims, x, y, z, TensorCode(f, dims, {x, y, z}), {}, {}, {4, 18, 24},
                      span_of(f, 4, {"1001", "0100", "0012"})};
    ex.closures = {
        {span_of(f, 2, {"10"}), span_of(f, 3, {"210", "001"}), span_of(f, 4, {"1101", "0121"})},
        {span_of(f, 2, {"01"}), span_of(f, 3, {"102", "011"}), span_of(f, 4, {"1001", "0121"})},
        {span_of(f, 2, {"10", "01"}), span_of(f, 3, {"100", "001"}), span_of(f, 4, {"1021", "0100"})},
    };
    ex.x_fibers = {
        {parse_vec(f, "20"), parse_vec(f, "10"), parse_vec(f, "00")},
        {parse_vec(f, "211"), parse_vec(f, "210"), parse_vec(f, "001"), parse_vec(f, "000")},
        {parse_vec(f, "2202"), parse_vec(f, "1101"), parse_vec(f, "1010"), parse_vec(f, "0000")},
    };
    return ex;
}

GabidulinExample gabidulin_example() {
    auto f = Field::prime(3);
    Dims dims{2, 4};
    auto code = [&](std::vector<std::string> rows) {
        std::vector<Tensor> g;
        for (auto& r : rows) g.push_back(parse_display(f, dims, r));
        return TensorCode(f, dims, g);
    };
    return {f, dims,
            code({"1000;0100", "0100;0010", "0010;0001", "0001;1001"}),
            code({"1000;2011", "0100;1202", "0010;2122", "0001;2211"})};
}

DualPerfectExample dual_perfect_example() {
    auto f = Field::prime(3);
    Dims dims{2, 3};
    Matrix gens;
    for (const char* s : {"000;011", "121;121", "001;001", "102;000", "101;000"})
        gens.push_back(parse_display(f, dims, s).entries());
    return {f, dims, Subspace(f, 6, gens), Subspace(f, 6, {parse_display(f, dims, "010;100").entries()})};
}

NonSublatticeExample non_sublattice_example() {
    auto f = Field::prime(2);
    Dims dims{3, 3};
    auto a = make_dual_closure_type(f, dims, {span_of(f, 3, {"010", "001"}), span_of(f, 3, {"100", "011"})});
    auto b = make_dual_closure_type(f, dims, {span_of(f, 3, {"100"}), Subspace::zero(f, 3)});
    Subspace ps(f, 9, {Tensor::outer(f, {parse_vec(f, "100"), parse_vec(f, "100")}).entries(),
                       Tensor::outer(f, {parse_vec(f, "100"), parse_vec(f, "011")}).entries()});
    return {f, dims, a, b, ps};
}

IncomparableExample incomparable_example() {
    auto f = Field::prime(2);
    Dims dims{3, 3};
    auto m = parse_display(f, dims, "100;000;000");
    auto n = parse_display(f, dims, "001;010;100");
    return {f, dims, m, n,
            {span_of(f, 3, {"100"}), span_of(f, 3, {"100"})},
            make_dual_closure_type(f, dims, {span_of(f, 3, {"100"}), Subspace::zero(f, 3)}),
            make_dual_closure_type(f, dims, {span_of(f, 3, {"100", "010"}), span_of(f, 3, {"100"})})};
}

SymmetricExample symmetric_example() {
    auto f = Field::prime(3);
    Dims dims{3, 3};
    auto x = parse_display(f, dims, "010;100;000");
    return {f, dims, x, make_dual_closure_type(f, dims, {span_of(f, 3, {"100"}), span_of(f, 3, {"100"})})};
}

RothExample roth_small() {
    RothExample ex;
    ex.params = roth_params(2, 3, 2);
    ex.sets.s = {{0, 0}, {0, 1}, {1, 0}};
    ex.sets.s_bar = {{1, 1}};
    // alpha^0 = 1; alpha^2 = alpha + 1
    ex.h_exp = {{0, 1, 1, 2}, {0, 2, 1, 0}, {0, 1, 2, 0}};
    ex.g_exp = {{2, 1, 1, 0}};
    ex.dual_exp = {2, 0};
    auto f = ex.params.base;
    Dims dims = ex.params.dims();
    ex.generators = {parse_display(f, dims, "10|11;01|10"), parse_display(f, dims, "11|01;10|11")};
    return ex;
}

RothExample roth_large() {
    RothExample ex;
    ex.params = roth_params(3, 4, 2);
    ex.sets.s = {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {2, 0}};
    ex.sets.s_bar = {{1, 2}, {2, 1}, {2, 2}};
    ex.h_exp = {{0, 1, 2, 1, 2, 3, 2, 3, 4}, {0, 2, 4, 1, 3, 5, 2, 4, 6}, {0, 4, 1, 1, 5, 2, 2, 6, 3},
                {0, 1, 2, 2, 3, 4, 4, 5, 6}, {0, 2, 4, 2, 4, 6, 4, 6, 1}, {0, 1, 2, 4, 5, 6, 1, 2, 3}};
    ex.g_exp = {{0, 1, 4, 4, 5, 1, 2, 3, 6}, {0, 4, 2, 1, 5, 3, 4, 1, 6}, {0, 1, 4, 1, 2, 5, 4, 5, 1}};
    ex.dual_exp = {0, 2, 1};
    auto f = ex.params.base;
    Dims dims = ex.params.dims();
    for (const char* s : {"100|011|001;010|111|110;011|010|101", "001|101|011;110|100|111;101|110|010",
                          "011|010|101;111|001|100;010|111|110", "100|010|011;011|111|010;001|110|101",
                          "011|111|010;010|001|111;101|100|110", "010|001|111;111|101|001;110|011|100",
                          "100|011|001;001|101|011;010|111|110", "001|101|011;011|010|101;110|100|111",
                          "011|010|101;101|110|010;111|001|100"})
        ex.generators.push_back(parse_display(f, dims, s));
    return ex;
}

} // namespace fixtures
} // namespace tencode
