#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "rigrot/classical_em.hpp"
#include "rigrot/pipeline.hpp"
#include "rigrot/spectra.hpp"

namespace rigrot {

/// Fixed formatting with 12 significant digits.
std::string format_number(double x);

void write_table(std::ostream& out, const std::vector<Spectrum>& spectra);

/// Columns: bundle, j, l, energy, multiplicity, source.
void write_csv(std::ostream& out, const std::vector<Spectrum>& spectra);

/// Full-precision energies plus exact values and degeneracy groups.
nlohmann::json spectrum_to_json(const Spectrum& s);
Spectrum spectrum_from_json(const nlohmann::json& j);  // throws Schema
void write_json(std::ostream& out, const std::vector<Spectrum>& spectra);
std::vector<Spectrum> spectra_from_json(const std::string& text);

nlohmann::json classification_to_json(const Classification& c);
void write_classification_table(std::ostream& out, const Classification& c);

/// texts[s][line][k] describes spectra[s].lines[line].sections[k].
void write_eigensections(std::ostream& out, const std::vector<Spectrum>& spectra,
                         const std::vector<SectionTexts>& texts);

struct EmSplitResult {
  SplitFieldValue split;
  double unsplit = 0.0;
  DecouplingReport decoupling;
};

nlohmann::json em_split_to_json(const EmSplitResult& r);
void write_em_split_table(std::ostream& out, const EmSplitResult& r);

}  // namespace rigrot
