#include "support/fixtures.hpp"

#include "effbound/bounds.hpp"

#include <algorithm>

namespace testing_support {

using namespace effbound;

std::filesystem::path fixture_path(const std::string& name)
{
    return std::filesystem::path(FIXTURE_DIR) / (name + ".json");
}

SurfaceModel load_fixture(const std::string& name)
{
    return parse_surface(fixture_path(name));
}

std::vector<std::string> fixture_names()
{
    std::vector<std::string> out;
    for (const auto& entry : std::filesystem::directory_iterator(FIXTURE_DIR))
        if (entry.path().extension() == ".json")
            out.push_back(entry.path().stem().string());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::string> ade_fixture_names()
{
    std::vector<std::string> out;
    for (const auto& n : fixture_names())
        if (n.rfind("ade_", 0) == 0)
            out.push_back(n);
    return out;
}

std::vector<DivisorClass> interesting_classes(const SurfaceModel& model)
{
    std::vector<DivisorClass> out;
    const auto h = model.ample_reference();
    if (!h)
        return out;
    out.push_back(*h);
    std::vector<std::size_t> negative;
    for (std::size_t i = 0; i < model.curve_count(); ++i)
        if (model.self_intersection(model.curve_class(i)) < 0)
            negative.push_back(i);
    if (negative.empty() || !is_negative_definite(model.curve_gram(negative)))
        return out;
    out.push_back(construct_polarization(model, negative, *h));
    const auto parts = connected_components(model, negative);
    if (parts.size() > 1)
        for (const auto& part : parts)
            out.push_back(construct_polarization(model, part, *h));
    return out;
}

} // namespace testing_support
