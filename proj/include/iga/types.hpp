#pragma once

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include <stdexcept>
#include <string>

namespace iga {

using Index = Eigen::Index;
using Scalar = double;

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Vector2 = Eigen::Vector2d;
using Matrix2 = Eigen::Matrix2d;

// Row-major sparse storage is CSR: row offsets, sorted column indices, values.
using SparseMatrix = Eigen::SparseMatrix<Scalar, Eigen::RowMajor>;
using Triplet = Eigen::Triplet<Scalar>;

struct GeometryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct AssemblyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FactorizationError : std::runtime_error {
    Index row;
    FactorizationError(const std::string& msg, Index r) : std::runtime_error(msg), row(r) {}
};

struct AnalysisError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace iga
