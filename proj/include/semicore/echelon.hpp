#pragma once

#include <optional>
#include <span>
#include <vector>

#include "semicore/poly.hpp"

namespace semicore {

enum class Exec { Serial, Parallel };

/// A finite-dimensional subspace of k[t]_{<=bound}, held as a fully reduced
/// echelon basis keyed by top degree: each row is monic, its pivot is its
/// degree, and no row has a nonzero coefficient at another row's pivot.
///
/// The basis is canonical for the subspace, so two spaces are equal iff
/// their rows are.
class EchelonSpace {
public:
    EchelonSpace(Field field, int bound);

    const Field& field() const noexcept { return field_; }
    int bound() const noexcept { return bound_; }
    int dim() const noexcept { return dim_; }

    bool has_pivot(int degree) const;
    /// Precondition: has_pivot(degree).
    const Poly& row(int degree) const { return *rows_[static_cast<std::size_t>(degree)]; }
    std::vector<int> pivots() const;
    std::vector<Poly> rows() const;

    /// Remainder of v after eliminating every pivot position, top-down.
    Poly reduce(Poly v) const;
    bool contains(const Poly& v) const { return reduce(v).is_zero(); }

    /// Adds v to the span. Returns true when the dimension grew.
    bool insert(const Poly& v, Exec exec = Exec::Parallel);
    /// Adds every vector; returns the number of new dimensions.
    int insert_all(std::vector<Poly> vs, Exec exec = Exec::Parallel);

    /// First row of `other` missing from this space, or nullptr.
    const Poly* first_missing(const EchelonSpace& other) const;
    bool contains_space(const EchelonSpace& other) const { return first_missing(other) == nullptr; }

    friend bool operator==(const EchelonSpace& a, const EchelonSpace& b);

private:
    void check_vector(const Poly& v) const;

    Field field_;
    int bound_;
    int dim_ = 0;
    std::vector<std::optional<Poly>> rows_;
};

namespace kernels {

/// Replaces each vector by its remainder modulo `space`. The serial version
/// is the reference; the parallel one splits the batch across OpenMP threads
/// and must give identical results.
void reduce_batch_serial(const EchelonSpace& space, std::span<Poly> batch);
void reduce_batch_parallel(const EchelonSpace& space, std::span<Poly> batch);

/// Clears column `pivot` from every row in `rows` using `pivot_row`, whose
/// leading term sits at `pivot` with coefficient 1.
void eliminate_column_serial(std::span<Poly*> rows, const Poly& pivot_row, int pivot);
void eliminate_column_parallel(std::span<Poly*> rows, const Poly& pivot_row, int pivot);

}  // namespace kernels

}  // namespace semicore
