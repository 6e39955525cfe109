// Copyright 2026 The qtestfn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qtestfn/boolfunc.hpp"

namespace qtestfn {

inline constexpr int kMaxChartVars = 6;

struct CatalogEntry {
    std::string id;
    TruthTable table;
    ParityForm form;
};

/// The positive functions on n variables in ascending numeric order,
/// labelled a, b, c, ... (two-letter ids aa, ab, ... past z).
struct FunctionCatalog {
    int num_vars = 0;
    std::vector<CatalogEntry> entries;

    /// Throws BoundsError for an unknown id.
    const CatalogEntry &by_id(std::string_view id) const;
    /// Position of the positive function with the given mask.
    std::size_t index_of_mask(const BitVec &mask) const;
};

/// Which positive function maps each input |x,1> (column) to each output
/// |y,1> (row). Rows and columns are in ascending order.
struct MappingChart {
    int num_vars = 0;
    FunctionCatalog catalog;
    /// Row-major catalog indices, rows = outputs y, columns = inputs x.
    std::vector<std::size_t> cells;

    std::size_t side() const {
        return std::size_t{1} << num_vars;
    }
    std::size_t index_at(std::size_t y, std::size_t x) const {
        return cells[y * side() + x];
    }
    const std::string &id_at(std::size_t y, std::size_t x) const {
        return catalog.entries[index_at(y, x)].id;
    }
    /// "<bits of v>1", the ket label used for row and column headers.
    std::string state_label(std::size_t v) const;
};

/// Label of the i-th catalog entry.
std::string catalog_id(std::size_t index);

FunctionCatalog build_catalog(int num_vars);
MappingChart build_chart(int num_vars);

/// Every row and every column holds each id exactly once.
bool is_latin_square(const MappingChart &chart);

/// Reflecting the columns left to right (x -> NOT x) turns id number j into
/// id number 2^n - 1 - j: the second half of the catalog runs along the
/// anti-diagonals where the first half runs along the diagonals.
bool has_mirror_symmetry(const MappingChart &chart);

enum class Format { Text, Csv };

/// Throws ParseError for anything other than "text" or "csv".
Format parse_format(std::string_view name);

/// CSV rows "id,binary,hex,decimal"; text is an aligned table with the
/// same columns under a header.
std::string render(const FunctionCatalog &catalog, Format format);

/// CSV: header row of input states, then one row per output state starting
/// with its label. With `negative`, cells name the complement of the
/// positive function (e.g. "-g"), which maps +|x,1> to -|y,1>.
std::string render(const MappingChart &chart, Format format, bool negative = false);

}  // namespace qtestfn
