#pragma once

#include "g2weitz/associative.hpp"
#include "g2weitz/torsion.hpp"

#include <array>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace g2w {

class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& msg, size_t offset);
    size_t offset() const { return offset_; }

  private:
    size_t offset_;
};

class InputError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Notation: terms like "1/2*e17", "-e13", "+2*e245"; "0" is the zero form.
// Indices are single digits 1..dim; unsorted indices pick up the permutation sign.
// expected_degree fixes the degree of "0" (and is enforced otherwise) when >= 0.
KForm parse_form(const std::string& s, int dim, int expected_degree = -1);
// Canonical notation; parse_form(format_form(f)) == f for degree >= 1.
std::string format_form(const KForm& f);

struct GeometryFile {
    int dim = 0;
    std::vector<std::string> structure;
    std::string phi;
    std::optional<std::array<int, 3>> associative_span;  // 1-based, as written
    Convention convention = Convention::plus;
    std::string comment;
    // Golden values: subcommand -> ("section/key", expected rendered value).
    std::vector<std::pair<std::string, std::vector<std::pair<std::string, std::string>>>> expect;
};

struct LoadedGeometry {
    GeometryFile file;
    LieAlgebraStructure L;
    G2Data g2;
};

GeometryFile parse_geometry(const std::string& json_text);
// Parses, then gates on Jacobi and the metric relation; failures raise InputError.
LoadedGeometry load_geometry(const std::string& path, std::optional<Convention> override_conv = std::nullopt);
LoadedGeometry build_geometry(const GeometryFile& file);

class ReportDoc {
  public:
    struct Section {
        std::string title;
        std::vector<std::pair<std::string, std::string>> entries;
    };

    void add(const std::string& title, const std::string& key, const std::string& value);
    // Records "pass"/"fail"; any failure makes ok() false.
    void check(const std::string& title, const std::string& key, bool passed);
    std::optional<std::string> find(const std::string& title, const std::string& key) const;
    bool has_section(const std::string& title) const;
    bool ok() const { return ok_; }
    const std::vector<Section>& sections() const { return sections_; }
    // Compares "section/key" expectations against this report; mismatches fail.
    void apply_expectations(const std::vector<std::pair<std::string, std::string>>& expect);

    std::string render_text() const;
    std::string render_json() const;

  private:
    Section& section(const std::string& title);
    std::vector<Section> sections_;
    bool ok_ = true;
};

// Exit codes: 0 success, 1 verification failure, 2 input error.
int run_command(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace g2w
