#include "qvl/curve.hpp"

#include <numeric>
#include <stdexcept>

namespace qvl {

int class_gcd(const CurveClass& d) {
    int g = std::gcd(std::gcd(std::abs(d.d0), std::abs(d.d1)),
                     std::gcd(std::abs(d.d2), std::abs(d.d3)));
    return g;
}

CurveClass divide_class(const CurveClass& d, int k) {
    if (k == 0 || d.d0 % k || d.d1 % k || d.d2 % k || d.d3 % k)
        throw std::domain_error("divide_class: k does not divide the class");
    return {d.d0 / k, d.d1 / k, d.d2 / k, d.d3 / k};
}

std::string to_string(const CurveClass& d) {
    return "(" + std::to_string(d.d0) + "," + std::to_string(d.d1) + "," +
           std::to_string(d.d2) + "," + std::to_string(d.d3) + ")";
}

std::string to_string(const GParams& p) {
    return "(" + std::to_string(p.a) + "," + std::to_string(p.b) + "," +
           std::to_string(p.c) + "," + std::to_string(p.d) + "," + std::to_string(p.e) + ")";
}

}  // namespace qvl
