#include "mockgauss/group.hpp"

#include <stdexcept>

namespace mockgauss {

GroupLabel::GroupLabel(Family family, int matrix_size) : family_(family), n_(matrix_size) {
    if (n_ < 1) throw std::invalid_argument("matrix size must be positive, got " + std::to_string(n_));
    switch (family_) {
        case Family::Unitary:
            break;
        case Family::Symplectic:
            if (n_ % 2 != 0)
                throw std::invalid_argument("Sp(N) requires N even, got N=" + std::to_string(n_));
            break;
        case Family::SpecialOrthogonalEven:
            if (n_ % 2 != 0)
                throw std::invalid_argument("SO(2M) requires N even, got N=" + std::to_string(n_));
            break;
        case Family::SpecialOrthogonalOdd:
            if (n_ % 2 != 1)
                throw std::invalid_argument("SO(2M+1) requires N odd, got N=" + std::to_string(n_));
            break;
    }
    if (is_orthogonal() && n_ < 2)
        throw std::invalid_argument("SO(N) requires N >= 2, got N=" + std::to_string(n_));
}

GroupLabel GroupLabel::parse(std::string_view family, int matrix_size) {
    if (family == "U" || family == "Unitary") return {Family::Unitary, matrix_size};
    if (family == "Sp" || family == "Symplectic") return {Family::Symplectic, matrix_size};
    if (family == "SO" || family == "SpecialOrthogonal") {
        return {matrix_size % 2 == 0 ? Family::SpecialOrthogonalEven : Family::SpecialOrthogonalOdd,
                matrix_size};
    }
    throw std::invalid_argument("unknown group family '" + std::string(family) + "' (expected U, Sp or SO)");
}

int GroupLabel::num_phases() const {
    switch (family_) {
        case Family::Unitary: return n_;
        case Family::Symplectic:
        case Family::SpecialOrthogonalEven:
        case Family::SpecialOrthogonalOdd: return n_ / 2;
    }
    return 0;
}

int GroupLabel::kernel_index() const {
    switch (family_) {
        case Family::Unitary: return n_;
        case Family::Symplectic: return n_ + 1;
        case Family::SpecialOrthogonalEven:
        case Family::SpecialOrthogonalOdd: return n_ - 1;
    }
    return 0;
}

std::string_view GroupLabel::family_tag() const {
    switch (family_) {
        case Family::Unitary: return "U";
        case Family::Symplectic: return "Sp";
        case Family::SpecialOrthogonalEven:
        case Family::SpecialOrthogonalOdd: return "SO";
    }
    return "?";
}

std::string GroupLabel::name() const { return std::string(family_tag()) + "(" + std::to_string(n_) + ")"; }

}  // namespace mockgauss
