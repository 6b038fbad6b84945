#include "spincurve/signed_permutation.hpp"

#include <algorithm>
#include <numeric>

#include "spincurve/errors.hpp"

namespace spincurve {

SignedPermutation::SignedPermutation(std::vector<int> p, std::vector<int> s)
    : perm(std::move(p)), signs(std::move(s)) {
    if (perm.size() != signs.size())
        throw PreconditionError("SignedPermutation: size mismatch");
    std::vector<bool> seen(perm.size(), false);
    for (size_t i = 0; i < perm.size(); ++i) {
        if (perm[i] < 0 || perm[i] >= static_cast<int>(perm.size()) || seen[perm[i]])
            throw PreconditionError("SignedPermutation: perm is not a bijection");
        seen[perm[i]] = true;
        if (signs[i] != 1 && signs[i] != -1)
            throw PreconditionError("SignedPermutation: signs must be +-1");
    }
}

SignedPermutation SignedPermutation::identity(int size) {
    std::vector<int> p(size), s(size, 1);
    std::iota(p.begin(), p.end(), 0);
    return SignedPermutation(std::move(p), std::move(s));
}

Eigen::MatrixXd SignedPermutation::matrix() const {
    int n = size();
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) m(perm[i], i) = signs[i];
    return m;
}

int SignedPermutation::det() const {
    int n = size();
    int d = 1;
    for (int s : signs) d *= s;
    // Parity of the underlying permutation by counting inversions.
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (perm[i] > perm[j]) d = -d;
    return d;
}

int inv_count(const SignedPermutation& p) {
    int n = p.size();
    int count = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (p.perm[i] > p.perm[j]) ++count;
    return count;
}

std::vector<SignedPermutation> enumerate_b_plus(int n) {
    if (n != 2 && n != 3)
        throw PreconditionError("enumerate_b_plus: only n = 2 or 3 supported");
    int size = n + 1;
    std::vector<int> p(size);
    std::iota(p.begin(), p.end(), 0);
    std::vector<SignedPermutation> out;
    do {
        for (int mask = 0; mask < (1 << size); ++mask) {
            std::vector<int> s(size);
            for (int i = 0; i < size; ++i) s[i] = (mask >> i) & 1 ? -1 : 1;
            SignedPermutation sp(p, s);
            if (sp.det() == 1) out.push_back(std::move(sp));
        }
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

}  // namespace spincurve
