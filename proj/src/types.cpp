#include "dimkit/types.hpp"

#include <cmath>

namespace dimkit {

PreprocessKind preprocess_kind_from_string(const std::string& name) {
    if (name == "none") return PreprocessKind::None;
    if (name == "center") return PreprocessKind::Center;
    if (name == "scale") return PreprocessKind::Scale;
    if (name == "cscale") return PreprocessKind::CScale;
    if (name == "decorrelate") return PreprocessKind::Decorrelate;
    if (name == "whiten") return PreprocessKind::Whiten;
    throw Error("UnknownPreprocess", "no preprocessing kind named '" + name + "'");
}

std::string to_string(PreprocessKind kind) {
    switch (kind) {
        case PreprocessKind::None: return "none";
        case PreprocessKind::Center: return "center";
        case PreprocessKind::Scale: return "scale";
        case PreprocessKind::CScale: return "cscale";
        case PreprocessKind::Decorrelate: return "decorrelate";
        case PreprocessKind::Whiten: return "whiten";
    }
    return "none";
}

PreprocessRecord PreprocessRecord::identity(Index p) {
    PreprocessRecord r;
    r.kind = PreprocessKind::None;
    r.column_means = Vector::Zero(p);
    r.column_scales = Vector::Ones(p);
    r.rotation = Matrix::Identity(p, p);
    return r;
}

Matrix PreprocessRecord::apply(const Matrix& x) const {
    if (x.cols() != column_means.size())
        throw Error("DimensionMismatch",
                    "record expects " + std::to_string(column_means.size()) +
                        " columns, data has " + std::to_string(x.cols()));
    Matrix y = (x.rowwise() - column_means.transpose()) * rotation;
    y.array().rowwise() /= column_scales.transpose().array();
    return y;
}

const Matrix& validate(const Matrix& data) {
    if (data.cols() < 1)
        throw Error("EmptyColumns", "data has no columns");
    if (data.rows() < 2)
        throw Error("TooFewRows",
                    "need at least 2 rows, got " + std::to_string(data.rows()));
    for (Index j = 0; j < data.cols(); ++j)
        for (Index i = 0; i < data.rows(); ++i)
            if (!std::isfinite(data(i, j)))
                throw Error("NonFinite", "non-finite entry at row " +
                                              std::to_string(i) + ", column " +
                                              std::to_string(j));
    return data;
}

Matrix apply_to_new(const PreprocessRecord& record, const Matrix& projection,
                    const Matrix& new_data) {
    if (new_data.cols() != record.column_means.size() ||
        projection.rows() != new_data.cols())
        throw Error("DimensionMismatch",
                    "data has " + std::to_string(new_data.cols()) +
                        " columns, record expects " +
                        std::to_string(record.column_means.size()) +
                        ", projection has " + std::to_string(projection.rows()) +
                        " rows");
    return record.apply(new_data) * projection;
}

}  // namespace dimkit
