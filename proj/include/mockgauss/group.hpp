#pragma once

#include <string>
#include <string_view>

namespace mockgauss {

enum class Family { Unitary, Symplectic, SpecialOrthogonalEven, SpecialOrthogonalOdd };

/// A classical compact group G(N), validated on construction.
class GroupLabel {
public:
    GroupLabel(Family family, int matrix_size);

    /// Parses a family name ("U", "Sp", "SO", or the long forms). "SO" picks
    /// the even or odd variant from the matrix size.
    static GroupLabel parse(std::string_view family, int matrix_size);

    Family family() const { return family_; }
    int matrix_size() const { return n_; }

    /// Number of independent eigenphases M.
    int num_phases() const;
    /// Index of the Dirichlet kernel S used by the Weyl kernel.
    int kernel_index() const;

    bool is_unitary() const { return family_ == Family::Unitary; }
    bool is_orthogonal() const {
        return family_ == Family::SpecialOrthogonalEven || family_ == Family::SpecialOrthogonalOdd;
    }

    std::string name() const;
    /// Short family tag used in configs and reports: "U", "Sp" or "SO".
    std::string_view family_tag() const;

    friend bool operator==(const GroupLabel&, const GroupLabel&) = default;

private:
    Family family_;
    int n_;
};

}  // namespace mockgauss
