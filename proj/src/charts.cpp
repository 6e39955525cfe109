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

#include "qtestfn/charts.hpp"

#include <algorithm>

#include "qtestfn/errors.hpp"

namespace qtestfn {

namespace {

void check_chart_vars(int num_vars) {
    if (num_vars < 1 || num_vars > kMaxChartVars) {
        throw BoundsError("chart size n=" + std::to_string(num_vars) + " is outside 1.." +
                          std::to_string(kMaxChartVars));
    }
}

std::string pad_right(const std::string &s, std::size_t width) {
    return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

// Joins rows of cells; text pads every column but the last, csv uses commas.
std::string layout(const std::vector<std::vector<std::string>> &rows, Format format) {
    std::vector<std::size_t> widths;
    for (const auto &row : rows) {
        widths.resize(std::max(widths.size(), row.size()), 0);
        for (std::size_t c = 0; c < row.size(); c++) {
            widths[c] = std::max(widths[c], row[c].size());
        }
    }
    std::string out;
    for (const auto &row : rows) {
        for (std::size_t c = 0; c < row.size(); c++) {
            if (format == Format::Csv) {
                if (c) {
                    out += ',';
                }
                out += row[c];
            } else {
                if (c) {
                    out += "  ";
                }
                out += c + 1 == row.size() ? row[c] : pad_right(row[c], widths[c]);
            }
        }
        out += '\n';
    }
    return out;
}

}  // namespace

const CatalogEntry &FunctionCatalog::by_id(std::string_view id) const {
    for (const auto &e : entries) {
        if (e.id == id) {
            return e;
        }
    }
    throw BoundsError("no catalog entry '" + std::string(id) + "' for n=" + std::to_string(num_vars));
}

std::size_t FunctionCatalog::index_of_mask(const BitVec &mask) const {
    for (std::size_t i = 0; i < entries.size(); i++) {
        if (entries[i].form.mask == mask) {
            return i;
        }
    }
    throw BoundsError("no catalog entry with mask " + mask.str());
}

std::string MappingChart::state_label(std::size_t v) const {
    return BitVec(num_vars, v).str() + "1";
}

std::string catalog_id(std::size_t index) {
    if (index < 26) {
        return std::string(1, static_cast<char>('a' + index));
    }
    std::size_t rest = index - 26;
    return std::string{static_cast<char>('a' + rest / 26 % 26), static_cast<char>('a' + rest % 26)};
}

FunctionCatalog build_catalog(int num_vars) {
    check_chart_vars(num_vars);
    std::vector<TruthTable> positives = generate_functions(num_vars).positives;
    std::sort(positives.begin(), positives.end());
    FunctionCatalog catalog{num_vars, {}};
    for (std::size_t i = 0; i < positives.size(); i++) {
        ParityForm form = to_parity_form(positives[i]);
        catalog.entries.push_back(CatalogEntry{catalog_id(i), std::move(positives[i]), form});
    }
    return catalog;
}

MappingChart build_chart(int num_vars) {
    MappingChart chart{num_vars, build_catalog(num_vars), {}};
    std::size_t side = chart.side();

    std::vector<std::size_t> by_mask(side);
    for (std::size_t m = 0; m < side; m++) {
        by_mask[m] = chart.catalog.index_of_mask(BitVec(num_vars, m));
    }
    chart.cells.resize(side * side);
    for (std::size_t y = 0; y < side; y++) {
        for (std::size_t x = 0; x < side; x++) {
            chart.cells[y * side + x] = by_mask[x ^ y];
        }
    }
    return chart;
}

bool is_latin_square(const MappingChart &chart) {
    std::size_t side = chart.side();
    for (std::size_t a = 0; a < side; a++) {
        std::vector<bool> in_row(side, false);
        std::vector<bool> in_col(side, false);
        for (std::size_t b = 0; b < side; b++) {
            std::size_t r = chart.index_at(a, b);
            std::size_t c = chart.index_at(b, a);
            if (r >= side || c >= side || in_row[r] || in_col[c]) {
                return false;
            }
            in_row[r] = true;
            in_col[c] = true;
        }
    }
    return true;
}

bool has_mirror_symmetry(const MappingChart &chart) {
    std::size_t side = chart.side();
    for (std::size_t y = 0; y < side; y++) {
        for (std::size_t x = 0; x < side; x++) {
            if (chart.index_at(y, side - 1 - x) != side - 1 - chart.index_at(y, x)) {
                return false;
            }
        }
    }
    return true;
}

Format parse_format(std::string_view name) {
    if (name == "text") {
        return Format::Text;
    }
    if (name == "csv") {
        return Format::Csv;
    }
    throw ParseError("unknown format '" + std::string(name) + "' (expected text or csv)");
}

std::string render(const FunctionCatalog &catalog, Format format) {
    std::vector<std::vector<std::string>> rows;
    if (format == Format::Text) {
        rows.push_back({"id", "bin", "hex", "dec"});
    }
    for (const auto &e : catalog.entries) {
        rows.push_back({e.id, e.table.to_binary(), hex_encode(e.table), e.table.to_decimal()});
    }
    return layout(rows, format);
}

std::string render(const MappingChart &chart, Format format, bool negative) {
    std::size_t side = chart.side();
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header{"y\\x"};
    for (std::size_t x = 0; x < side; x++) {
        header.push_back(chart.state_label(x));
    }
    rows.push_back(std::move(header));
    for (std::size_t y = 0; y < side; y++) {
        std::vector<std::string> row{chart.state_label(y)};
        for (std::size_t x = 0; x < side; x++) {
            row.push_back((negative ? "-" : "") + chart.id_at(y, x));
        }
        rows.push_back(std::move(row));
    }
    return layout(rows, format);
}

}  // namespace qtestfn
