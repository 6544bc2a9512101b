#include "bnsl/dataset.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

namespace bnsl {

Dataset::Dataset(std::vector<std::vector<Level>> columns, std::vector<int> cardinalities,
                 std::vector<std::string> names)
    : columns_(std::move(columns)), cards_(std::move(cardinalities)), names_(std::move(names)) {
    if (columns_.empty()) throw DataError("dataset has no variables");
    if (cards_.size() != columns_.size()) throw DataError("cardinality count does not match column count");
    if (!names_.empty() && names_.size() != columns_.size()) throw DataError("name count does not match column count");
    n_ = columns_.front().size();
    if (n_ == 0) throw DataError("dataset has no rows");
    for (std::size_t v = 0; v < columns_.size(); ++v) {
        if (columns_[v].size() != n_) throw DataError("ragged columns");
        if (cards_[v] < 2) throw DataError("degenerate variable " + std::to_string(v) + ": cardinality below 2");
        if (cards_[v] > std::numeric_limits<Level>::max()) throw DataError("cardinality too large");
        for (Level x : columns_[v]) {
            if (x >= cards_[v]) throw DataError("level index out of range in column " + std::to_string(v));
        }
    }
}

Dataset Dataset::permuted(std::span<const int> perm) const {
    if (perm.size() != columns_.size()) throw std::invalid_argument("permutation size mismatch");
    std::vector<std::vector<Level>> cols;
    std::vector<int> cards;
    std::vector<std::string> names;
    cols.reserve(perm.size());
    for (int src : perm) {
        cols.push_back(columns_.at(static_cast<std::size_t>(src)));
        cards.push_back(cards_.at(static_cast<std::size_t>(src)));
        if (!names_.empty()) names.push_back(names_[static_cast<std::size_t>(src)]);
    }
    return Dataset(std::move(cols), std::move(cards), std::move(names));
}

std::size_t ContingencyTable::index(std::span<const int> config) const {
    std::size_t idx = 0;
    std::size_t stride = 1;
    for (std::size_t k = 0; k < dims.size(); ++k) {
        idx += static_cast<std::size_t>(config[k]) * stride;
        stride *= static_cast<std::size_t>(dims[k]);
    }
    return idx;
}

ContingencyTable ContingencyTable::marginalize(std::size_t pos) const {
    if (pos >= variables.size()) throw std::out_of_range("marginalize position");
    ContingencyTable out;
    out.total = total;
    for (std::size_t k = 0; k < variables.size(); ++k) {
        if (k == pos) continue;
        out.variables.push_back(variables[k]);
        out.dims.push_back(dims[k]);
    }
    std::size_t inner = 1;
    for (std::size_t k = 0; k < pos; ++k) inner *= static_cast<std::size_t>(dims[k]);
    const auto mid = static_cast<std::size_t>(dims[pos]);
    const std::size_t outer = cells.size() / (inner * mid);
    out.cells.assign(inner * outer, 0);
    for (std::size_t o = 0; o < outer; ++o)
        for (std::size_t m = 0; m < mid; ++m)
            for (std::size_t i = 0; i < inner; ++i)
                out.cells[o * inner + i] += cells[(o * mid + m) * inner + i];
    return out;
}

namespace {

std::vector<std::string> split_row(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (std::size_t k = 0; k < line.size(); ++k) {
        const char c = line[k];
        if (quoted) {
            if (c == '"') {
                if (k + 1 < line.size() && line[k + 1] == '"') {
                    cur.push_back('"');
                    ++k;
                } else {
                    quoted = false;
                }
            } else {
                cur.push_back(c);
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (quoted) throw DataError("unterminated quote");
    out.push_back(std::move(cur));
    return out;
}

}  // namespace

Dataset load_csv(const std::filesystem::path& path, bool has_header) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot read " + path.string());

    std::vector<std::string> names;
    std::vector<std::vector<std::string>> tokens;
    std::string line;
    std::size_t width = 0;
    bool first = true;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto fields = split_row(line);
        if (first) {
            width = fields.size();
            tokens.resize(width);
            first = false;
            if (has_header) {
                names = std::move(fields);
                continue;
            }
        }
        if (fields.size() != width)
            throw DataError("ragged row at line " + std::to_string(lineno));
        for (std::size_t v = 0; v < width; ++v) {
            if (fields[v].empty()) throw DataError("missing value at line " + std::to_string(lineno));
            tokens[v].push_back(std::move(fields[v]));
        }
    }
    if (first || tokens.empty() || tokens.front().empty()) throw DataError("no data rows in " + path.string());

    std::vector<std::vector<Level>> columns(width);
    std::vector<int> cards(width);
    for (std::size_t v = 0; v < width; ++v) {
        std::map<std::string, Level> levels;
        for (const auto& t : tokens[v]) levels.emplace(t, 0);
        if (levels.size() < 2) {
            const std::string label = names.empty() ? std::to_string(v) : names[v];
            throw DataError("degenerate variable " + label + ": single observed level");
        }
        if (levels.size() > std::numeric_limits<Level>::max()) throw DataError("too many levels in column " + std::to_string(v));
        Level next = 0;
        for (auto& [tok, idx] : levels) idx = next++;
        columns[v].reserve(tokens[v].size());
        for (const auto& t : tokens[v]) columns[v].push_back(levels.at(t));
        cards[v] = static_cast<int>(levels.size());
    }
    return Dataset(std::move(columns), std::move(cards), std::move(names));
}

void write_csv(const Dataset& data, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write " + path.string());
    for (int v = 0; v < data.p(); ++v) {
        if (v) out << ',';
        if (data.names().empty())
            out << 'X' << v;
        else
            out << data.names()[static_cast<std::size_t>(v)];
    }
    out << '\n';
    std::string row;
    for (std::size_t r = 0; r < data.n(); ++r) {
        row.clear();
        for (int v = 0; v < data.p(); ++v) {
            if (v) row.push_back(',');
            row += std::to_string(data.column(v)[r]);
        }
        row.push_back('\n');
        out << row;
    }
}

std::size_t table_size(const Dataset& data, std::span<const int> vars) {
    std::size_t size = 1;
    for (int v : vars) {
        const auto r = static_cast<std::size_t>(data.cardinality(v));
        if (size > std::numeric_limits<std::size_t>::max() / r) return std::numeric_limits<std::size_t>::max();
        size *= r;
    }
    return size;
}

ContingencyTable count(const Dataset& data, std::span<const int> vars, std::size_t cell_budget) {
    for (std::size_t a = 0; a < vars.size(); ++a) {
        if (vars[a] < 0 || vars[a] >= data.p()) throw std::invalid_argument("variable index out of range");
        for (std::size_t b = a + 1; b < vars.size(); ++b)
            if (vars[a] == vars[b]) throw std::invalid_argument("duplicate variable index");
    }
    const std::size_t size = table_size(data, vars);
    if (size > cell_budget) throw CellBudgetExceeded("contingency table of " + std::to_string(size) + " cells exceeds budget");

    ContingencyTable t;
    t.variables.assign(vars.begin(), vars.end());
    for (int v : vars) t.dims.push_back(data.cardinality(v));
    t.cells.assign(size, 0);
    t.total = data.n();

    std::vector<std::size_t> idx(data.n(), 0);
    std::size_t stride = 1;
    for (int v : vars) {
        const auto col = data.column(v);
        for (std::size_t r = 0; r < idx.size(); ++r) idx[r] += col[r] * stride;
        stride *= static_cast<std::size_t>(data.cardinality(v));
    }
    for (std::size_t k : idx) ++t.cells[k];
    return t;
}

}  // namespace bnsl
