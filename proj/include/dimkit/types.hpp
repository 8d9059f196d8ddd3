#pragma once

#include <Eigen/Dense>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dimkit {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

/// All library failures throw this; `code()` is a stable machine-readable
/// token (e.g. "DisconnectedGraph"), `what()` is "<code>: <detail>".
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& detail)
        : std::runtime_error(code + ": " + detail), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

using Labels = std::vector<int>;

enum class PreprocessKind { None, Center, Scale, CScale, Decorrelate, Whiten };

PreprocessKind preprocess_kind_from_string(const std::string& name);
std::string to_string(PreprocessKind kind);

/// Saved affine/rotation transform. Application order is fixed:
///   y = ((x - column_means) * rotation) ./ column_scales
/// with rotation = I and scales = 1 for the kinds that do not use them.
struct PreprocessRecord {
    PreprocessKind kind = PreprocessKind::None;
    Vector column_means;
    Vector column_scales;
    Matrix rotation;

    static PreprocessRecord identity(Index p);

    Matrix apply(const Matrix& x) const;
};

struct ReductionResult {
    Matrix embedding;                                  // n x d
    std::optional<Matrix> projection;                  // p x d, linear methods
    std::optional<std::vector<Index>> selected_features;  // feature selection
    PreprocessRecord preprocess;
    std::string method;
    std::vector<double> explained_variance;            // pca family only
};

struct IdeResult {
    double estdim = 0.0;
    std::optional<Vector> local_estimates;  // bottom-up estimators only
};

/// Throws NonFinite / TooFewRows / EmptyColumns; returns the input unchanged.
const Matrix& validate(const Matrix& data);

/// Out-of-sample extension for linear methods:
/// transform new rows by `record`, then multiply by `projection`.
Matrix apply_to_new(const PreprocessRecord& record, const Matrix& projection,
                    const Matrix& new_data);

}  // namespace dimkit
