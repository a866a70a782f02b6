/*
   Copyright 2026 The polymask Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "polymask/cli.hpp"

#include <charconv>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "polymask/errors.hpp"
#include "polymask/refinement.hpp"
#include "polymask/solve.hpp"

namespace polymask::cli {
namespace {

using nlohmann::ordered_json;

// Malformed input (bad literal, bad list); maps to exit code 2.
struct ParseFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string_view> split_csv(std::string_view text) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        if (comma == std::string_view::npos) {
            parts.push_back(text.substr(start));
            return parts;
        }
        parts.push_back(text.substr(start, comma - start));
        start = comma + 1;
    }
}

Rational parse_rational_token(std::string_view token, std::string_view what) {
    if (auto value = Rational::parse(token)) {
        return *value;
    }
    throw ParseFailure("invalid " + std::string(what) + " literal \"" + std::string(token) +
                       "\" (expected digits, -digits or digits/digits with a positive "
                       "denominator)");
}

std::vector<Rational> parse_rational_list(std::string_view text, std::string_view what) {
    std::vector<Rational> values;
    for (std::string_view token : split_csv(text)) {
        values.push_back(parse_rational_token(token, what));
    }
    return values;
}

std::vector<std::int64_t> parse_shift_list(std::string_view text) {
    std::vector<std::int64_t> shifts;
    for (std::string_view token : split_csv(text)) {
        std::int64_t value = 0;
        const char* end = token.data() + token.size();
        auto [ptr, ec] = std::from_chars(token.data(), end, value);
        if (ec != std::errc() || ptr != end) {
            throw ParseFailure("invalid shift literal \"" + std::string(token) +
                               "\" (expected an integer)");
        }
        shifts.push_back(value);
    }
    return shifts;
}

std::string latex_rational(const Rational& r) {
    if (r.den() == 1) {
        return r.str();
    }
    const mpz_class num = r.num();
    const std::string sign = sgn(num) < 0 ? "-" : "";
    const mpz_class mag = abs(num);
    return sign + "\\frac{" + mag.get_str() + "}{" + r.den().get_str() + "}";
}

std::vector<std::vector<std::string>> matrix_strings(const Matrix& m, bool latex) {
    std::vector<std::vector<std::string>> rows(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i) {
        rows[i].reserve(m.dim());
        for (std::size_t j = 0; j < m.dim(); ++j) {
            rows[i].push_back(latex ? latex_rational(m(i, j)) : m(i, j).str());
        }
    }
    return rows;
}

void print_text_matrix(std::ostream& out, const std::string& label, const Matrix& m) {
    const auto rows = matrix_strings(m, /*latex=*/false);
    std::vector<std::size_t> width(m.dim(), 0);
    for (const auto& row : rows) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            width[j] = std::max(width[j], row[j].size());
        }
    }
    out << label << ":\n";
    for (const auto& row : rows) {
        out << '[';
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j > 0) out << ' ';
            out << std::string(width[j] - row[j].size(), ' ') << row[j];
        }
        out << "]\n";
    }
}

void print_latex_matrix(std::ostream& out, const std::string& label,
                        const std::vector<std::vector<std::string>>& rows) {
    out << label << " = \\begin{pmatrix}\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            if (j > 0) out << " & ";
            out << rows[i][j];
        }
        if (i + 1 < rows.size()) out << " \\\\";
        out << '\n';
    }
    out << "\\end{pmatrix}\n";
}

ordered_json matrix_json(const Matrix& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < m.dim(); ++j) {
            row.push_back(m(i, j).str());
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

ordered_json rational_list_json(const Vec& values) {
    ordered_json list = ordered_json::array();
    for (const Rational& v : values) {
        list.push_back(v.str());
    }
    return list;
}

struct Request {
    std::string poly;
    std::string shifts;
    std::string dilation;
    std::string mask;
    std::string format = "text";
};

int cmd_solve(const Request& req, std::ostream& out) {
    const Polynomial p{parse_rational_list(req.poly, "coefficient")};
    const std::vector<std::int64_t> shifts = parse_shift_list(req.shifts);
    const Rational a = parse_rational_token(req.dilation, "dilation");

    const RefinementProblem problem(p, shifts, a);
    const Mask mask = compute_mask(problem);
    const bool verified = verify_refinement(p, shifts, a, mask);
    Rational mask_sum(0);
    for (const Rational& entry : mask) {
        mask_sum += entry;
    }

    if (req.format == "json") {
        ordered_json doc;
        doc["degree"] = p.degree();
        doc["dilation"] = a.str();
        doc["shifts"] = shifts;
        doc["mask"] = rational_list_json(mask);
        doc["mask_sum"] = mask_sum.str();
        doc["verified"] = verified;
        out << doc.dump() << '\n';
    } else if (req.format == "latex") {
        out << "% degree " << p.degree() << ", dilation " << a.str() << ", shifts "
            << req.shifts << '\n';
        out << "\\begin{pmatrix} ";
        for (std::size_t i = 0; i < mask.size(); ++i) {
            if (i > 0) out << " & ";
            out << latex_rational(mask[i]);
        }
        out << " \\end{pmatrix}\n";
        out << "% mask_sum " << mask_sum.str() << ", verified "
            << (verified ? "true" : "false") << '\n';
    } else {
        out << "degree: " << p.degree() << '\n';
        out << "dilation: " << a.str() << '\n';
        for (std::size_t i = 0; i < mask.size(); ++i) {
            out << "shift " << shifts[i] << ": " << mask[i].str() << '\n';
        }
        out << "mask_sum: " << mask_sum.str() << '\n';
        out << "verified: " << (verified ? "true" : "false") << '\n';
    }
    return 0;
}

int cmd_verify(const Request& req, std::ostream& out) {
    const Polynomial p{parse_rational_list(req.poly, "coefficient")};
    const std::vector<std::int64_t> shifts = parse_shift_list(req.shifts);
    const Rational a = parse_rational_token(req.dilation, "dilation");
    const Mask mask = parse_rational_list(req.mask, "mask");

    if (mask.size() != shifts.size()) {
        throw ShiftCountMismatch("mask has " + std::to_string(mask.size()) +
                                 " entries for " + std::to_string(shifts.size()) + " shifts");
    }
    if (a.is_zero()) {
        throw ZeroDilation();
    }
    const bool verified = verify_refinement(p, shifts, a, mask);

    if (req.format == "json") {
        ordered_json doc;
        doc["degree"] = p.degree();
        doc["dilation"] = a.str();
        doc["shifts"] = shifts;
        doc["mask"] = rational_list_json(mask);
        doc["verified"] = verified;
        out << doc.dump() << '\n';
    } else if (req.format == "latex") {
        out << "% verified " << (verified ? "true" : "false") << '\n';
    } else {
        out << "verified: " << (verified ? "true" : "false") << '\n';
    }
    return verified ? 0 : 1;
}

int cmd_matrices(const Request& req, std::ostream& out) {
    const Polynomial p{parse_rational_list(req.poly, "coefficient")};
    const std::vector<std::int64_t> shifts = parse_shift_list(req.shifts);
    const Rational a = parse_rational_token(req.dilation, "dilation");

    const RefinementProblem problem(p, shifts, a);  // validates before any build
    const Matrix d = dilation_matrix(a, p.degree());
    const Matrix c = coefficient_matrix(p);
    const Matrix v = vandermonde_matrix(shifts);
    const Matrix product = mat_mul(mat_mul(d, c), v);

    if (req.format == "json") {
        ordered_json doc;
        doc["degree"] = p.degree();
        doc["dilation"] = a.str();
        doc["shifts"] = shifts;
        doc["p"] = rational_list_json(p.coeffs());
        doc["dilation_matrix"] = matrix_json(d);
        doc["coefficient_matrix"] = matrix_json(c);
        doc["vandermonde_matrix"] = matrix_json(v);
        doc["product"] = matrix_json(product);
        out << doc.dump() << '\n';
    } else if (req.format == "latex") {
        std::vector<std::vector<std::string>> p_col;
        for (const Rational& coeff : p.coeffs()) {
            p_col.push_back({latex_rational(coeff)});
        }
        print_latex_matrix(out, "p", p_col);
        print_latex_matrix(out, "D_a", matrix_strings(d, /*latex=*/true));
        print_latex_matrix(out, "C", matrix_strings(c, /*latex=*/true));
        print_latex_matrix(out, "V", matrix_strings(v, /*latex=*/true));
        print_latex_matrix(out, "D_a C V", matrix_strings(product, /*latex=*/true));
    } else {
        out << "p: [";
        for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
            if (k > 0) out << ' ';
            out << p[k].str();
        }
        out << "]\n";
        print_text_matrix(out, "D", d);
        print_text_matrix(out, "C", c);
        print_text_matrix(out, "V", v);
        print_text_matrix(out, "D*C*V", product);
    }
    return 0;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact refinement masks for rational polynomials"};
    app.name("polymask");
    app.require_subcommand(1);

    Request req;
    const auto add_common = [&req](CLI::App* sub, bool with_mask) {
        sub->add_option("--poly", req.poly, "Coefficients, ascending, comma separated (p0 first)")
            ->required();
        sub->add_option("--shifts", req.shifts, "Integer shifts, comma separated")->required();
        sub->add_option("--dilation", req.dilation, "Dilation factor, nonzero rational")
            ->required();
        if (with_mask) {
            sub->add_option("--mask", req.mask, "Mask entries, comma separated, aligned with shifts")
                ->required();
        }
        sub->add_option("--format", req.format, "Output format")
            ->check(CLI::IsMember({"text", "json", "latex"}));
    };

    CLI::App* solve = app.add_subcommand("solve", "Compute the refinement mask");
    CLI::App* verify = app.add_subcommand("verify", "Check a given mask against the identity");
    CLI::App* matrices = app.add_subcommand("matrices", "Print the factor matrices and p vector");
    add_common(solve, /*with_mask=*/false);
    add_common(verify, /*with_mask=*/true);
    add_common(matrices, /*with_mask=*/false);

    try {
        // App::parse consumes from the back of the vector.
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (solve->parsed()) return cmd_solve(req, out);
        if (verify->parsed()) return cmd_verify(req, out);
        return cmd_matrices(req, out);
    } catch (const ParseFailure& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        err << "error: " << e.name() << ": " << e.what() << '\n';
        return 3;
    }
}

}  // namespace polymask::cli
