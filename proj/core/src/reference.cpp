#include "ncv/reference.hpp"

#include "ncv/errors.hpp"

namespace ncv::reference {

namespace {

const std::vector<Vector64> kK3{{0}, {1}};

const std::vector<Vector64> kK4{{0, 0}, {2, 2}, {4, 0}};

const std::vector<Vector64> kK5{{0, 0, 0}, {3, 6, 6},  {4, 8, 8}, {5, 10, 6},
                                {6, 8, 4}, {7, 6, 6}, {10, 0, 12}};

const std::vector<Vector64> kK6{
    {0, 0, 0, 0},    {4, 12, 24, 24},  {6, 18, 36, 36},  {8, 20, 32, 24},
    {10, 18, 36, 36}, {8, 24, 40, 32},  {10, 22, 36, 28}, {12, 24, 24, 32},
    {10, 26, 36, 28}, {8, 24, 48, 32},  {14, 18, 36, 36}, {12, 24, 32, 32},
    {12, 20, 40, 24}, {10, 30, 36, 20}, {16, 12, 48, 24}, {20, 0, 72, 0}};

const std::vector<VertexPair> kFigK6Left{{0, 1}, {2, 4}, {3, 4}, {4, 5}};
const std::vector<VertexPair> kFigK6Right{{0, 1}, {0, 4}, {1, 4}};

const std::vector<VertexPair> kFigK8Left{{0, 1}, {6, 7}, {0, 4}, {0, 2},
                                         {1, 7}, {2, 4}, {5, 7}, {4, 6}};
const std::vector<VertexPair> kFigK8Right{{0, 1}, {0, 4}, {0, 6}, {1, 5},
                                          {1, 7}, {4, 6}, {5, 7}, {6, 7}};

// The negated s=2 row repeats the even entries of the s=2 row (negation
// preserves even-length counts); the widely printed (6,8,8,10) fails that
// identity and direct enumeration both.
const std::vector<Vector64> kPetersenTable{
    {0, 0, 0, 0},  {4, 4, 8, 12}, {6, 6, 8, 10}, {6, 10, 0, 10},
    {12, 0, 0, 20}, {8, 4, 8, 8},  {6, 6, 8, 10}, {6, 10, 0, 10}};

// The four pictured unbalanced classes; a fifth class with vector
// (1,3,3,0) also exists (one triangle edge plus the far spoke).
const std::vector<Vector64> kPrism{{0, 2, 4, 2}, {1, 1, 3, 2}, {2, 0, 6, 0}, {2, 2, 2, 2}};
const Vector64 kPrismExtra{1, 3, 3, 0};

// Exhaustive enumeration over all 2^12 signings realizes exactly six
// vectors; the two-negative-edge profiles are (2,12,2) for the pair
// sharing a quadrilateral and (4,8,4) for the antipodal pair. The
// sometimes-quoted (2,12,4) and (2,4,2) are not realizable.
const std::vector<std::vector<VertexPair>> kCubeSignings{
    {{0, 1}}, {{0, 1}, {4, 5}}, {{0, 1}, {6, 7}}};
const std::vector<Vector64> kCubeVectors{{2, 8, 4}, {2, 12, 2}, {4, 8, 4}};

const std::vector<int> kHeawoodMuAlt{3, 2, 3, 3, 3};
const std::vector<int> kHeawoodMuOther{2, 2, 3, 3, 3};

}  // namespace

std::span<const Vector64> kn_vectors(int n) {
  switch (n) {
    case 3: return kK3;
    case 4: return kK4;
    case 5: return kK5;
    case 6: return kK6;
    default: throw UnknownNameError("no stored vector set for K_" + std::to_string(n));
  }
}

std::span<const VertexPair> fig_k6_left() { return kFigK6Left; }
std::span<const VertexPair> fig_k6_right() { return kFigK6Right; }
Vector64 fig_k6_vector() { return {10, 18, 36, 36}; }

std::span<const VertexPair> fig_k8_left() { return kFigK8Left; }
std::span<const VertexPair> fig_k8_right() { return kFigK8Right; }
Vector64 fig_k8_vector() { return {28, 108, 336, 848, 1440, 1248}; }

std::span<const Vector64> petersen_table() { return kPetersenTable; }

std::span<const Vector64> prism_vectors() { return kPrism; }
const Vector64& prism_extra_vector() { return kPrismExtra; }

std::span<const std::vector<VertexPair>> cube_signings() { return kCubeSignings; }
std::span<const Vector64> cube_vectors() { return kCubeVectors; }

std::span<const int> heawood_mu_alternate_c6() { return kHeawoodMuAlt; }
std::span<const int> heawood_mu_other() { return kHeawoodMuOther; }

}  // namespace ncv::reference
