#include <kacmod/gzpattern.hpp>

#include <cmath>
#include <string>

namespace kacmod {

bool near_integer(double x) {
    return std::fabs(x - std::round(x)) <= 1e-9;
}

void validate_highest_weight(const HighestWeight& hw) {
    const double diff = hw.m13 - hw.m23;
    if (!near_integer(diff) || diff < -1e-9)
        throw std::invalid_argument(
            "highest weight: m13 - m23 must be a nonnegative integer");
}

int gl2_width(const HighestWeight& hw) {
    validate_highest_weight(hw);
    return static_cast<int>(std::round(hw.m13 - hw.m23)) + 1;
}

std::array<double, 3> signature_shift(const HighestWeight& hw, int k) {
    validate_highest_weight(hw);
    switch (k) {
        case 0: return {hw.m13, hw.m23, hw.m33};
        case 1: return {hw.m13, hw.m23 - 1, hw.m33 + 1};
        case 2: return {hw.m13 - 1, hw.m23, hw.m33 + 1};
        case 3: return {hw.m13 - 1, hw.m23 - 1, hw.m33 + 2};
        default:
            throw RangeError("signature_shift: floor index must be 0..3, got " +
                             std::to_string(k));
    }
}

int submodule_width(const HighestWeight& hw, int k) {
    const auto sig = signature_shift(hw, k);
    return static_cast<int>(std::round(sig[0] - sig[1])) + 1;
}

GZVector make_gzvector(const HighestWeight& top, int k, double m11) {
    const auto sig = signature_shift(top, k);
    if (!near_integer(sig[0] - m11) || sig[0] - m11 < -1e-9 ||
        !near_integer(m11 - sig[1]) || m11 - sig[1] < -1e-9)
        throw std::invalid_argument("GZ pattern: m11 must satisfy m12 >= m11 >= m22 "
                                    "with integer offsets");
    GZVector v;
    v.top = top;
    v.k = k;
    v.m11 = m11;
    v.m12 = sig[0];
    v.m22 = sig[1];
    v.m31 = sig[2];
    return v;
}

LValues lvalues(const GZVector& v) {
    LValues l;
    l.l11 = v.m11 - 1;
    l.l12 = v.m12 - 1;
    l.l22 = v.m22 - 2;
    l.l31 = v.m31 - 1;
    l.l13 = v.top.m13 - 1;
    l.l23 = v.top.m23 - 2;
    l.l33 = v.top.m33 - 1;
    l.l = (v.top.m13 - v.top.m23) / 2.0;
    return l;
}

std::vector<GZVector> enumerate_basis(const HighestWeight& hw, int k) {
    const int width = submodule_width(hw, k);
    std::vector<GZVector> out;
    if (width <= 0) return out;
    const auto sig = signature_shift(hw, k);
    out.reserve(static_cast<std::size_t>(width));
    for (int j = 0; j < width; ++j)
        out.push_back(make_gzvector(hw, k, sig[0] - j));
    return out;
}

std::vector<GZVector> full_module_basis(const HighestWeight& hw) {
    std::vector<GZVector> out;
    out.reserve(static_cast<std::size_t>(4 * gl2_width(hw)));
    for (int k = 0; k < 4; ++k) {
        auto part = enumerate_basis(hw, k);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

GZVector highest_weight_vector(const HighestWeight& hw, int k) {
    if (submodule_width(hw, k) <= 0)
        throw EmptyModuleError("highest_weight_vector: floor " + std::to_string(k) +
                               " is collapsed");
    const auto sig = signature_shift(hw, k);
    return make_gzvector(hw, k, sig[0]);
}

int floor_parity(int k) {
    if (k < 0 || k > 3)
        throw RangeError("floor_parity: floor index must be 0..3");
    return (k == 1 || k == 2) ? 1 : 0;
}

std::size_t basis_index(const HighestWeight& hw, int k, double m11) {
    if (k < 0 || k > 3)
        throw RangeError("basis_index: floor index must be 0..3");
    const auto sig = signature_shift(hw, k);
    const double offset_in_floor = sig[0] - m11;
    const int width = submodule_width(hw, k);
    if (!near_integer(offset_in_floor) || offset_in_floor < -1e-9 ||
        std::round(offset_in_floor) >= width)
        throw RangeError("basis_index: m11 outside floor range");
    std::size_t idx = static_cast<std::size_t>(std::round(offset_in_floor));
    for (int kk = 0; kk < k; ++kk)
        idx += static_cast<std::size_t>(submodule_width(hw, kk));
    return idx;
}

} // namespace kacmod
