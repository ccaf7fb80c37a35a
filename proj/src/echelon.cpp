#include "semicore/echelon.hpp"

#include <algorithm>
#include <string>

#include "semicore/error.hpp"

namespace semicore {

EchelonSpace::EchelonSpace(Field field, int bound)
    : field_(field), bound_(bound), rows_(static_cast<std::size_t>(bound < 0 ? 0 : bound + 1)) {
    if (bound < 0) throw Error(Errc::InvalidArgument, "negative degree bound");
}

void EchelonSpace::check_vector(const Poly& v) const {
    if (!(v.field() == field_)) throw Error(Errc::FieldMismatch, "vector outside the space's field");
    if (v.degree() > bound_) {
        throw Error(Errc::BoundTooSmall,
                    "degree " + std::to_string(v.degree()) + " exceeds bound " + std::to_string(bound_));
    }
}

bool EchelonSpace::has_pivot(int degree) const {
    return degree >= 0 && degree <= bound_ && rows_[static_cast<std::size_t>(degree)].has_value();
}

std::vector<int> EchelonSpace::pivots() const {
    std::vector<int> out;
    for (int d = 0; d <= bound_; ++d) {
        if (rows_[static_cast<std::size_t>(d)]) out.push_back(d);
    }
    return out;
}

std::vector<Poly> EchelonSpace::rows() const {
    std::vector<Poly> out;
    out.reserve(static_cast<std::size_t>(dim_));
    for (const auto& r : rows_) {
        if (r) out.push_back(*r);
    }
    return out;
}

Poly EchelonSpace::reduce(Poly v) const {
    check_vector(v);
    for (int d = v.degree(); d >= 0; d = std::min(d - 1, v.degree())) {
        const auto& row = rows_[static_cast<std::size_t>(d)];
        if (!row) continue;
        Scalar c = v.coeff(d);
        if (c.is_zero()) continue;
        v.add_scaled(-c, *row);
    }
    return v;
}

bool EchelonSpace::insert(const Poly& v, Exec exec) {
    Poly r = reduce(v);
    if (r.is_zero()) return false;
    r = r.monic();
    const int d = r.degree();

    std::vector<Poly*> above;
    for (int e = d + 1; e <= bound_; ++e) {
        auto& row = rows_[static_cast<std::size_t>(e)];
        if (row && !row->coeff(d).is_zero()) above.push_back(&*row);
    }
    if (exec == Exec::Parallel) {
        kernels::eliminate_column_parallel(above, r, d);
    } else {
        kernels::eliminate_column_serial(above, r, d);
    }
    rows_[static_cast<std::size_t>(d)] = std::move(r);
    ++dim_;
    return true;
}

int EchelonSpace::insert_all(std::vector<Poly> vs, Exec exec) {
    for (const Poly& v : vs) check_vector(v);
    if (exec == Exec::Parallel) {
        kernels::reduce_batch_parallel(*this, vs);
    } else {
        kernels::reduce_batch_serial(*this, vs);
    }
    int added = 0;
    for (const Poly& v : vs) {
        if (!v.is_zero() && insert(v, exec)) ++added;
    }
    return added;
}

const Poly* EchelonSpace::first_missing(const EchelonSpace& other) const {
    for (const auto& r : other.rows_) {
        if (r && !contains(*r)) return &*r;
    }
    return nullptr;
}

bool operator==(const EchelonSpace& a, const EchelonSpace& b) {
    if (!(a.field_ == b.field_) || a.dim_ != b.dim_) return false;
    const int top = std::max(a.bound_, b.bound_);
    for (int d = 0; d <= top; ++d) {
        const bool ha = a.has_pivot(d);
        if (ha != b.has_pivot(d)) return false;
        if (ha && !(a.row(d) == b.row(d))) return false;
    }
    return true;
}

namespace kernels {

void reduce_batch_serial(const EchelonSpace& space, std::span<Poly> batch) {
    for (Poly& v : batch) v = space.reduce(std::move(v));
}

void reduce_batch_parallel(const EchelonSpace& space, std::span<Poly> batch) {
    const long n = static_cast<long>(batch.size());
#pragma omp parallel for schedule(dynamic, 4) if (n > 16)
    for (long i = 0; i < n; ++i) {
        Poly& v = batch[static_cast<std::size_t>(i)];
        v = space.reduce(std::move(v));
    }
}

void eliminate_column_serial(std::span<Poly*> rows, const Poly& pivot_row, int pivot) {
    for (Poly* row : rows) {
        Scalar c = row->coeff(pivot);
        if (!c.is_zero()) row->add_scaled(-c, pivot_row);
    }
}

void eliminate_column_parallel(std::span<Poly*> rows, const Poly& pivot_row, int pivot) {
    const long n = static_cast<long>(rows.size());
#pragma omp parallel for schedule(static) if (n > 16)
    for (long i = 0; i < n; ++i) {
        Poly* row = rows[static_cast<std::size_t>(i)];
        Scalar c = row->coeff(pivot);
        if (!c.is_zero()) row->add_scaled(-c, pivot_row);
    }
}

}  // namespace kernels

}  // namespace semicore
