#pragma once

#include "effbound/io.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace testing_support {

std::filesystem::path fixture_path(const std::string& name);
effbound::SurfaceModel load_fixture(const std::string& name);

/// Every fixture name (file stem), sorted.
std::vector<std::string> fixture_names();

/// Fixture names of the ADE curve lattices.
std::vector<std::string> ade_fixture_names();

/// Nef and big classes worth testing on a fixture: the ample reference and
/// every polarization contracting a connected component of negative curves.
std::vector<effbound::DivisorClass> interesting_classes(const effbound::SurfaceModel& model);

} // namespace testing_support
