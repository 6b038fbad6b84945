#pragma once

#include <vector>

#include <Eigen/Dense>

namespace spincurve {

// Signed permutation matrix, stored column-wise: column i has its only
// nonzero entry signs[i] in row perm[i] (the matrix sends e_i to
// signs[i] * e_perm[i]). Indices are 0-based; size is 3 or 4.
struct SignedPermutation {
    std::vector<int> perm;
    std::vector<int> signs;

    SignedPermutation() = default;
    SignedPermutation(std::vector<int> p, std::vector<int> s);

    static SignedPermutation identity(int size);

    int size() const { return static_cast<int>(perm.size()); }
    Eigen::MatrixXd matrix() const;
    int det() const;

    bool operator==(const SignedPermutation& o) const {
        return perm == o.perm && signs == o.signs;
    }
};

// Number of pairs i < j with perm[i] > perm[j]; signs are ignored.
int inv_count(const SignedPermutation& p);

// All elements of B^+_{n+1} (signed permutation matrices of determinant
// one); n = 2 gives 24 elements, n = 3 gives 192.
std::vector<SignedPermutation> enumerate_b_plus(int n);

}  // namespace spincurve
