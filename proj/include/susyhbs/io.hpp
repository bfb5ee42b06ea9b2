#pragma once

#include <filesystem>
#include <string>

#include "susyhbs/area.hpp"
#include "susyhbs/partner.hpp"
#include "susyhbs/scattering.hpp"
#include "susyhbs/spectrum.hpp"

namespace susyhbs {

/** Locale-independent, 12 significant digits; identical inputs give
 *  byte-identical text. */
std::string format_number(scalar_t v);

/** Write via temp file + rename so outputs appear complete or not at all. */
void atomic_write(const std::filesystem::path& path, const std::string& content);

std::string pair_csv(const PartnerPair& pair);
std::string spectrum_csv(const Spectrum& spectrum);
std::string curve_csv(const ScatteringCurve& curve);
std::string area_json(const AreaReport& report);

}  // namespace susyhbs
