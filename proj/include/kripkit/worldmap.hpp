#pragma once

#include <vector>

#include "kripkit/error.hpp"

namespace kripkit {

// Total function between two frames' worlds; candidate p-morphism.
struct WorldMap {
    int source_worlds = 0;
    int target_worlds = 0;
    std::vector<int> image;  // image[a] < target_worlds for every source world a

    WorldMap() = default;
    WorldMap(int src, int dst, std::vector<int> img)
        : source_worlds(src), target_worlds(dst), image(std::move(img)) {
        if (static_cast<int>(image.size()) != src) throw Error("world map is not total");
        for (int v : image)
            if (v < 0 || v >= dst) throw Error("world map image out of range");
    }

    int operator()(int a) const { return image.at(static_cast<std::size_t>(a)); }

    static WorldMap identity(int n) {
        std::vector<int> img(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = i;
        return WorldMap(n, n, std::move(img));
    }
};

// g after f: (g∘f)(a) = g(f(a)).
inline WorldMap compose(const WorldMap& g, const WorldMap& f) {
    if (f.target_worlds != g.source_worlds) throw Error("world maps do not compose");
    std::vector<int> img(f.image.size());
    for (std::size_t a = 0; a < f.image.size(); ++a)
        img[a] = g.image[static_cast<std::size_t>(f.image[a])];
    return WorldMap(f.source_worlds, g.target_worlds, std::move(img));
}

}  // namespace kripkit
