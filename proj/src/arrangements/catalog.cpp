#include "curveh/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "curveh/parser.hpp"

namespace curveh {

namespace {

Line line(long a, long b, long c)
{
    return Line{{mpq_class(a), mpq_class(b), mpq_class(c)}};
}

Conic conic(const std::string& text)
{
    Poly q = parse_poly(text);
    if (q.degree() != 2) throw std::logic_error("catalog conic of wrong degree: " + text);
    auto c = [&](int a, int b, int d) { return q.coefficient(Monomial(a, b, d)); };
    return Conic{{c(2, 0, 0), c(1, 1, 0) / 2, c(1, 0, 1) / 2, c(0, 2, 0), c(0, 1, 1) / 2, c(0, 0, 2)}};
}

CurveComponent curve(const std::string& text)
{
    return CurveComponent{parse_poly(text)};
}

Arrangement lines_of(const std::vector<std::array<long, 3>>& coeffs)
{
    Arrangement a;
    for (const auto& c : coeffs) a.add(line(c[0], c[1], c[2]));
    return a;
}

Arrangement cl1()
{
    Arrangement a;
    a.add(conic("x^2 + y^2 - z^2"));
    a.add(line(0, 1, -1));
    a.add(line(1, 0, -1));
    a.add(line(1, 0, 1));
    return a;
}

Arrangement three_conics()
{
    Arrangement a;
    a.add(conic("-3*x^2 + x*y + y*z + x*z"));
    a.add(conic("-3*y^2 + x*y + y*z + z*x"));
    a.add(conic("-3*z^2 + x*y + y*z + z*x"));
    return a;
}

std::string power_sum(int k)
{
    if (k == 1) return "x + y";
    return "x^" + std::to_string(k) + " + y^" + std::to_string(k);
}

CatalogEntry make(const std::string& base, std::optional<int> param)
{
    CatalogEntry e;
    e.name = base;
    auto no_param = [&] {
        if (param) throw UnknownCatalogName("catalog entry '" + base + "' takes no parameter");
    };
    if (base == "bolza") {
        no_param();
        e.description = "Bolza curve, one E8 singularity";
        e.arrangement.add(curve("x^5 - y^2*z^3 - x*z^4"));
        e.stated_exponents = std::vector<int>{2, 4, 4};
        e.stated_class = "Type2A";
    } else if (base == "cl1") {
        no_param();
        e.description = "conic and three lines (x^2+y^2-z^2)(y-z)(x^2-z^2)";
        e.arrangement = cl1();
        e.stated_class = "Free";
        e.stated_tau = 12;
    } else if (base == "cl") {
        no_param();
        e.description = "cl1 together with the conic y^2 - xz";
        e.arrangement = cl1();
        e.arrangement.add(conic("y^2 - x*z"));
        e.stated_exponents = std::vector<int>{4, 4, 5, 5};
        e.stated_class = "Type2B";
        e.stated_tau = 24;
        e.note = "the quoted Tjurina number 24 disagrees with the value 23 given by the type 2B formula for (4,4,5,5)";
    } else if (base == "three-conics") {
        no_param();
        e.description = "three conics through one triple point";
        e.arrangement = three_conics();
        e.stated_exponents = std::vector<int>{2, 3};
        e.stated_class = "Free";
    } else if (base == "three-conics-plus") {
        no_param();
        e.description = "three-conics together with the conic x^2 + y^2 + z^2";
        e.arrangement = three_conics();
        e.arrangement.add(conic("x^2 + y^2 + z^2"));
        e.stated_exponents = std::vector<int>{4, 5, 6};
        e.stated_class = "Type2A";
    } else if (base == "eb7") {
        no_param();
        e.description = "xyz(x+y-2z)(x-3y+z)(-5x+y+z)(x+y+z)";
        e.arrangement = lines_of({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, -2}, {1, -3, 1}, {-5, 1, 1}, {1, 1, 1}});
        e.stated_exponents = std::vector<int>{4, 4, 4};
        e.stated_class = "Type2A";
    } else if (base == "generic5") {
        no_param();
        e.description = "five lines in general position";
        e.arrangement = lines_of({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {1, 2, 3}});
        e.stated_exponents = std::vector<int>{3, 3, 3, 3};
        e.stated_class = "Type2B";
    } else if (base == "ziegler") {
        no_param();
        e.description = "Ziegler's nine lines";
        e.arrangement = lines_of({{1, 0, 0}, {0, 1, 0}, {1, -1, -1}, {1, -1, 1}, {2, 1, -2}, {1, 3, -3}, {3, 2, 3},
                                  {1, 5, 5}, {7, -4, -1}});
        e.stated_exponents = std::vector<int>{5, 6, 6, 6};
        e.stated_type = 3;
    } else if (base == "yuzvinsky") {
        no_param();
        e.description = "Yuzvinsky's nine lines, same combinatorics as ziegler";
        e.arrangement = lines_of({{1, 0, 0}, {0, 1, 0}, {4, -5, -5}, {1, -1, 1}, {16, 13, -20}, {1, 3, -3}, {3, 2, 3},
                                  {1, 5, 5}, {7, -4, -1}});
        e.stated_exponents = std::vector<int>{6, 6, 6, 6, 6, 6};
        e.stated_type = 4;
    } else if (base == "fermat-union") {
        int d = param.value_or(3);
        if (d < 2) throw UnknownCatalogName("fermat-union needs d >= 2");
        e.name = base + ":" + std::to_string(d);
        e.description = "Fermat curve of degree d together with the d lines x^d + y^d = 0";
        e.arrangement.add(curve("x^" + std::to_string(d) + " + y^" + std::to_string(d) + " + z^" + std::to_string(d)));
        e.arrangement.add(curve(power_sum(d)));
        e.stated_class = "Free";
        e.stated_type = 0;
    } else if (base == "cor11-family") {
        int e1 = param.value_or(5);
        if (e1 < 4) throw UnknownCatalogName("cor11-family needs e1 >= 4");
        e.name = base + ":" + std::to_string(e1);
        e.description = "x(xz + y^2)(x^(e1-3) + y^(e1-3))";
        e.arrangement.add(line(1, 0, 0));
        e.arrangement.add(conic("x*z + y^2"));
        if (e1 == 4) {
            e.arrangement.add(line(1, 1, 0));
        } else {
            e.arrangement.add(curve(power_sum(e1 - 3)));
        }
        int d2 = std::max(2, e1 - 3);
        e.stated_exponents = std::vector<int>{e1 - 1 - d2, d2};
        e.stated_class = "Free";
        e.stated_tau = long(e1 - 1) * (e1 - 1) - 2L * (e1 - 3);
    } else if (base == "conic-plus-tangent") {
        no_param();
        e.description = "smooth conic y^2 - xz and its tangent z = 0";
        e.arrangement.add(conic("y^2 - x*z"));
        e.arrangement.add(line(0, 0, 1));
        e.stated_exponents = std::vector<int>{1, 1};
        e.stated_class = "Free";
    } else if (base == "ex10") {
        no_param();
        e.description = "smooth conic x^2 + y^2 + z^2 and the line x = 0";
        e.arrangement.add(conic("x^2 + y^2 + z^2"));
        e.arrangement.add(line(1, 0, 0));
        e.stated_exponents = std::vector<int>{1, 2, 2};
        e.stated_type = 1;
    } else {
        throw UnknownCatalogName("unknown catalog name '" + base + "'");
    }
    return e;
}

}  // namespace

CatalogEntry catalog(const std::string& spec)
{
    std::string base = spec;
    std::optional<int> param;
    auto cut = spec.find_first_of(":(");
    if (cut != std::string::npos) {
        base = spec.substr(0, cut);
        std::string rest = spec.substr(cut + 1);
        if (spec[cut] == '(') {
            if (rest.empty() || rest.back() != ')') throw UnknownCatalogName("malformed catalog name '" + spec + "'");
            rest.pop_back();
        }
        if (rest.empty() || rest.size() > 3 || !std::all_of(rest.begin(), rest.end(), [](unsigned char c) { return std::isdigit(c); })) {
            throw UnknownCatalogName("malformed catalog parameter in '" + spec + "'");
        }
        param = std::stoi(rest);
    }
    return make(base, param);
}

std::vector<std::string> catalog_names()
{
    return {"bolza", "cl1", "cl", "three-conics", "three-conics-plus", "eb7", "generic5", "ziegler", "yuzvinsky",
            "fermat-union", "cor11-family", "conic-plus-tangent", "ex10"};
}

}  // namespace curveh
