#pragma once

#include <Eigen/Dense>

#include <initializer_list>
#include <span>
#include <string_view>

namespace conesep {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Norms known to the engine. Only Euclidean drives the separation search;
/// L1 and Linf are available for pointwise evaluation.
enum class NormKind { Euclidean, L1, Linf };

std::string_view to_string(NormKind kind);
NormKind norm_kind_from_string(std::string_view name);

double norm_value(const Vector& x, NormKind kind = NormKind::Euclidean);

/// Dual norm of a functional given by its coordinate vector.
double dual_norm(const Vector& x_star, NormKind kind = NormKind::Euclidean);

Vector make_vector(std::span<const double> coords);
Vector make_vector(std::initializer_list<double> coords);

/// Throws DimensionMismatch unless `a` and `b` have equal length.
void require_same_dim(const Vector& a, const Vector& b, std::string_view where);

}  // namespace conesep
