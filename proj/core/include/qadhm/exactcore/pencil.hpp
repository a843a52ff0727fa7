#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qadhm/exactcore/matrix.hpp"

namespace qadhm {

// Matrix depending linearly on named variables: const + sum_k vars[k]*coeffs[k].
template <class T>
struct Pencil {
    std::vector<std::string> vars;
    std::vector<Matrix<T>> coeffs;
    Matrix<T> constant;

    Pencil() = default;
    Pencil(std::vector<std::string> v, std::size_t rows, std::size_t cols)
        : vars(std::move(v)), coeffs(vars.size(), Matrix<T>(rows, cols)), constant(rows, cols) {}

    std::size_t rows() const { return constant.rows(); }
    std::size_t cols() const { return constant.cols(); }

    std::size_t index_of(const std::string& name) const {
        for (std::size_t k = 0; k < vars.size(); ++k)
            if (vars[k] == name) return k;
        throw std::out_of_range("Pencil: no variable '" + name + "'");
    }
    Matrix<T>& coeff(const std::string& name) { return coeffs[index_of(name)]; }
    const Matrix<T>& coeff(const std::string& name) const { return coeffs[index_of(name)]; }

    Matrix<T> evaluate(const std::vector<T>& point) const {
        if (point.size() != vars.size()) throw std::invalid_argument("Pencil: point has wrong arity");
        Matrix<T> m = constant;
        for (std::size_t k = 0; k < vars.size(); ++k)
            if (!detail::qadhm_is_zero(point[k])) m += point[k] * coeffs[k];
        return m;
    }

    void check_shapes() const {
        if (coeffs.size() != vars.size()) throw std::invalid_argument("Pencil: coefficient count mismatch");
        for (const auto& c : coeffs)
            if (c.rows() != rows() || c.cols() != cols()) throw std::invalid_argument("Pencil: shape mismatch");
    }
};

}  // namespace qadhm
