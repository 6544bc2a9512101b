#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace bnsl {

/// Raised for unreadable or malformed input data.
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when a contingency table would exceed the configured cell budget.
class CellBudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultCellBudget = 10'000'000;

using Level = std::uint16_t;

/// Column-major discrete sample matrix. Immutable once constructed.
class Dataset {
public:
    Dataset() = default;

    /// Validates that every level is below its column's cardinality and that
    /// every cardinality is at least 2.
    Dataset(std::vector<std::vector<Level>> columns, std::vector<int> cardinalities,
            std::vector<std::string> names = {});

    std::size_t n() const { return n_; }
    int p() const { return static_cast<int>(columns_.size()); }
    int cardinality(int var) const { return cards_.at(static_cast<std::size_t>(var)); }
    const std::vector<int>& cardinalities() const { return cards_; }
    std::span<const Level> column(int var) const { return columns_.at(static_cast<std::size_t>(var)); }
    const std::vector<std::string>& names() const { return names_; }

    /// Returns a dataset whose column k is column perm[k] of this one.
    Dataset permuted(std::span<const int> perm) const;

private:
    std::size_t n_ = 0;
    std::vector<std::vector<Level>> columns_;
    std::vector<int> cards_;
    std::vector<std::string> names_;
};

/// Dense joint counts over an ordered variable list. The first variable
/// varies fastest in the cell index.
struct ContingencyTable {
    std::vector<int> variables;
    std::vector<int> dims;
    std::vector<std::uint32_t> cells;
    std::size_t total = 0;

    std::size_t index(std::span<const int> config) const;
    /// Sums out the variable at position `pos` in `variables`.
    ContingencyTable marginalize(std::size_t pos) const;
};

/// Loads a comma-separated file of categorical tokens. Levels are assigned
/// in lexicographic token order.
Dataset load_csv(const std::filesystem::path& path, bool has_header);

/// Writes level indices as integers, with a header of variable names
/// (X0, X1, ... when the dataset carries none).
void write_csv(const Dataset& data, const std::filesystem::path& path);

/// Counts joint configurations of `vars`. Throws std::invalid_argument for
/// duplicate or out-of-range indices and CellBudgetExceeded when the table
/// would exceed `cell_budget` cells.
ContingencyTable count(const Dataset& data, std::span<const int> vars,
                       std::size_t cell_budget = kDefaultCellBudget);

/// Product of cardinalities of `vars`, saturating at SIZE_MAX.
std::size_t table_size(const Dataset& data, std::span<const int> vars);

}  // namespace bnsl
