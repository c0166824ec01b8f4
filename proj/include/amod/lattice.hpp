#ifndef AMOD_LATTICE_HPP
#define AMOD_LATTICE_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace amod {

using integer = mpz_class;
using int_vector = std::vector<integer>;

/// Dense row-major matrix of unbounded integers.
class int_matrix {
  public:
    int_matrix() = default;
    int_matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static int_matrix identity(std::size_t n);
    static int_matrix from_rows(std::vector<int_vector> const & rows, std::size_t cols);
    static int_matrix from_columns(std::vector<int_vector> const & cols, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    integer & operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    integer const & operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    int_vector row(std::size_t r) const;
    int_vector column(std::size_t c) const;
    std::vector<int_vector> columns() const;
    int_matrix transpose() const;

    bool operator==(int_matrix const & o) const
    {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(int_matrix const & o) const { return !(*this == o); }

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<integer> a_;
};

int_matrix operator*(int_matrix const & a, int_matrix const & b);

/// Column-style Hermite normal form of the column lattice of m: same shape,
/// lower-triangular echelon (each nonzero column starts at its pivot row,
/// pivot rows strictly increasing), positive pivots, and in every pivot row
/// the entries of earlier columns reduced into [0, pivot). Zero columns
/// trail. Canonical: two matrices have the same column lattice iff their
/// HNFs agree.
int_matrix hnf(int_matrix const & m);

/// hnf(m) with the trailing zero columns dropped (a basis of the lattice).
int_matrix hnf_basis(int_matrix const & m);

struct snf_report {
    /// d_1 | d_2 | ... of length min(rows, cols); zeros trail.
    std::vector<integer> invariant_factors;
    std::size_t rank = 0;
};

snf_report snf(int_matrix const & m);

/// Torsion and free summands of Z^n / (column span of m): the invariant
/// factors different from 1, followed by one 0 per free summand.
std::vector<integer> cokernel_invariants(int_matrix const & m);

/// True iff v is an integer combination of the columns of basis.
bool lattice_membership(int_vector const & v, int_matrix const & basis);

/// |Z^d : column lattice|; nullopt when the lattice is not of full rank.
std::optional<integer> lattice_index(int_matrix const & basis);

/// Determinant by fraction-free (Bareiss) elimination.
integer determinant(int_matrix const & m);

/// Columns spanning {x in Z^cols : m x = 0}, in column-HNF form.
int_matrix integer_kernel(int_matrix const & m);

/// Integer coordinates of v with respect to HNF basis columns,
/// or nullopt when v is not in the lattice.
std::optional<int_vector> lattice_coordinates(int_vector const & v, int_matrix const & hnf_columns);

/// Incrementally built sublattice of Z^n, kept as a row-echelon basis with
/// positive pivots and reduced entries above each pivot. Rows are inserted
/// one at a time, so the full relation list never has to be materialized.
class row_lattice {
  public:
    explicit row_lattice(std::size_t n) : n_(n) {}

    /// Returns true if the lattice grew.
    bool insert(int_vector v);
    bool contains(int_vector v) const;

    std::size_t dimension() const { return n_; }
    std::size_t rank() const { return rows_.size(); }

    /// Echelon basis rows, sorted by pivot column.
    std::vector<int_vector> const & basis() const { return rows_; }
    std::vector<std::size_t> const & pivots() const { return pivots_; }

    /// Matrix whose columns are the basis rows (for the column-lattice API).
    int_matrix as_columns() const;

  private:
    void full_reduce();

    std::size_t n_;
    std::vector<int_vector> rows_;
    std::vector<std::size_t> pivots_;
};

} // namespace amod

#endif
