#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "sigmafold/complex.hpp"
#include "sigmafold/geometry.hpp"
#include "sigmafold/star.hpp"

namespace sigma {

inline constexpr int kDocumentVersion = 1;

struct Document {
  SigmaComplex complex;
  StarParams params;
};

// Canonical JSON text: facets sorted, star indices 1-based, two-space indent.
std::string serialize(const SigmaComplex& complex, const StarParams& params = {});

// Throws ParseError (message carries the byte offset or JSON path),
// VersionMismatch, ForbiddenFacet and anything build() throws.
Document parse(std::string_view text);

// Vertices in Coord4 order, then one quad per facet; 1-based indices.
std::string export_obj(const Mesh& mesh);

// Reads `v` and 4-vertex `f` records; everything else is ignored.
QuadMesh import_obj(std::string_view text);

struct AnimationFrame {
  int frame = 0;
  double t = 0.0;
  double alpha = 0.0;
  std::filesystem::path file;
};

// Writes frame_NNN.obj for `frames` uniform samples of t in
// [margin, 1 - margin] and a manifest.json next to them. Throws DomainError
// for frames < 2 and IoError when the directory cannot be written.
std::vector<AnimationFrame> export_animation(const SigmaComplex& complex, const StarParams& params,
                                             int frames, const std::filesystem::path& dir,
                                             double margin = 0.02, int extent = 1);

// Same, at explicit fold parameters.
std::vector<AnimationFrame> export_animation(const SigmaComplex& complex, const StarParams& params,
                                             const std::vector<double>& ts,
                                             const std::filesystem::path& dir, int extent = 1);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view text);

}  // namespace sigma
