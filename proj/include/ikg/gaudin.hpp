#pragma once

// Periodic, constrained-open and diagonal-open IK Gaudin operators as explicit
// 3^N x 3^N matrices, the total-S^z sector structure and ED entry points.

#include <map>
#include <memory>
#include <vector>

#include "ikg/linalg.hpp"
#include "ikg/transfer.hpp"

namespace ikg {

enum class GaudinKind { Periodic, Constrained, Diagonal };

const char* to_string(GaudinKind k);
GaudinKind gaudin_kind_from_string(const std::string& s);

// Gaudin operators live at eta = 0; only the boundary data of the constrained
// family (eps, sigma, sigma_bar) survives the limit.
struct GaudinParams {
  GaudinKind kind = GaudinKind::Periodic;
  std::vector<cplx> theta;
  cplx eps{};
  cplx sigma{};
  cplx sigma_bar{};

  int n() const { return static_cast<int>(theta.size()); }
};

// Throws SingularConfiguration on the poles of the operator formulas.
void validate_gaudin(const GaudinParams& p);

// Finite-eta chain matching the parameters, for the transfer-matrix oracle.
ChainSpec chain_spec(const GaudinParams& p, cplx eta);

// On-site term Gamma_j(u) of the constrained family.
ComplexMatrix gamma_onsite(cplx u, cplx eps, cplx sigma, cplx sigma_bar);

ComplexMatrix build_periodic_gaudin(int j, const GaudinParams& p);
ComplexMatrix build_open_gaudin(int j, const GaudinParams& p);
ComplexMatrix build_diagonal_gaudin(int j, const GaudinParams& p);

// Dispatches on p.kind.
ComplexMatrix build_gaudin(int j, const GaudinParams& p);

struct GaudinFamily {
  GaudinParams params;
  std::vector<ComplexMatrix> operators;  // H_1 ... H_N
};

// Cached, immutable family; the key covers every parameter at full precision.
std::shared_ptr<const GaudinFamily> gaudin_family(const GaudinParams& p);

struct SectorDecomposition {
  ComplexMatrix total_sz;
  std::map<int, std::vector<std::size_t>> blocks;  // S^z eigenvalue -> basis indices
};

SectorDecomposition sector_decomposition(int n);

// ED of a Gaudin operator; delegates to eig with the default tolerance.
Spectrum exact_spectrum(const ComplexMatrix& h, bool hermitian_hint);

}  // namespace ikg
