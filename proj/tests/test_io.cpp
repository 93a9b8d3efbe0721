#include <doctest.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <sstream>

#include "tricomplex/io.hpp"

using namespace tricomplex;

namespace {

const std::filesystem::path kGolden{TRICOMPLEX_GOLDEN_DIR};

std::filesystem::path temp_path(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("tricomplex_test_" + name);
}

Raster2D one_cell(std::uint32_t escape, std::uint32_t max_iter) {
    Raster2D r;
    r.window.x = {0.0, 1.0, 1};
    r.window.y = {0.0, 1.0, 1};
    r.escape = {escape};
    r.max_iter = max_iter;
    return r;
}

}  // namespace

TEST_CASE("gray levels") {
    CHECK(gray_level(0, 1000) == 0);
    CHECK(gray_level(1000, 1000) == 255);
    CHECK(gray_level(5000, 1000) == 255);
    CHECK(gray_level(500, 1000) == 127);
    CHECK(gray_level(3, 1000) == 0);
    CHECK(gray_level(4, 1000) == 1);
    CHECK(gray_level(1, 0) == 255);
}

TEST_CASE("1x1 PPM") {
    using namespace std::string_literals;
    CHECK(ppm_bytes(one_cell(0, 10)) == "P6\n1 1\n255\n\0\0\0"s);
    CHECK(ppm_bytes(one_cell(10, 10)) == "P6\n1 1\n255\n\xff\xff\xff"s);
}

TEST_CASE("PPM rows run from the top of the window") {
    Raster2D r = one_cell(0, 4);
    r.window = Window2D::make(0, 2, 0, 3, 2, 3);
    r.escape = {1, 2, 3, 4, 0, 0};  // bottom row first in storage
    const std::string bytes = ppm_bytes(r);
    const std::string header = "P6\n2 3\n255\n";
    REQUIRE(bytes.size() == header.size() + 18);
    const auto px = [&](int row, int col) { return static_cast<unsigned char>(bytes[header.size() + 3 * (2 * row + col)]); };
    CHECK(px(0, 0) == 0);
    CHECK(px(0, 1) == 0);
    CHECK(px(1, 0) == gray_level(3, 4));
    CHECK(px(1, 1) == 255);
    CHECK(px(2, 0) == gray_level(1, 4));
    CHECK(px(2, 1) == gray_level(2, 4));
}

TEST_CASE("VOX header, payload and round trip") {
    using namespace std::string_literals;
    Raster3D single;
    single.window.x = {0.0, 1.0, 1};
    single.window.y = {0.0, 1.0, 1};
    single.window.z = {0.0, 1.0, 1};
    single.escape = {0};
    CHECK(vox_bytes(single) ==
          "TRIVOX1 1 1 1 0.000000000 1.000000000 0.000000000 1.000000000 0.000000000 1.000000000\n\x01"s);

    const Window3D w = Window3D::make(-1, 1, -0.5, 0.25, 0, 3, 3, 4, 5);
    Raster3D r{w, std::vector<std::uint32_t>(w.cell_count())};
    for (std::size_t i = 0; i < r.escape.size(); ++i) r.escape[i] = (i * 7) % 3 == 0 ? 0 : static_cast<std::uint32_t>(i);
    const VoxGrid g = parse_vox(vox_bytes(r));
    CHECK(g.window.x.cells == 3);
    CHECK(g.window.z.cells == 5);
    CHECK(g.window.y.lo == -0.5);
    CHECK(g.window.y.hi == 0.25);
    REQUIRE(g.occupancy.size() == r.escape.size());
    for (std::size_t i = 0; i < r.escape.size(); ++i) CHECK(g.occupancy[i] == (r.escape[i] == 0 ? 1 : 0));

    const auto path = temp_path("roundtrip.vox");
    write_vox(r, path);
    CHECK(read_vox(path).occupancy == g.occupancy);
    std::filesystem::remove(path);

    CHECK_THROWS_AS(parse_vox("TRIVOX1 2 2 2 0 1 0 1 0 1\n\x01"), std::runtime_error);
    CHECK_THROWS_AS(parse_vox("NOTVOX 1 1 1 0 1 0 1 0 1\n\x01"), std::runtime_error);
    CHECK_THROWS_AS(parse_vox("no newline"), std::runtime_error);
}

TEST_CASE("octahedron OBJ") {
    const std::string obj = octahedron_obj(OctahedronSpec::perplexbrot(3));
    CHECK(obj.find("v 0.384900179 0.000000000 0.000000000\n") != std::string::npos);
    std::istringstream in(obj);
    std::string line;
    std::vector<std::array<double, 3>> verts;
    std::vector<std::array<int, 3>> faces;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "v") {
            std::array<double, 3> v{};
            ls >> v[0] >> v[1] >> v[2];
            verts.push_back(v);
        } else if (tag == "f") {
            std::array<int, 3> f{};
            ls >> f[0] >> f[1] >> f[2];
            faces.push_back(f);
        }
    }
    REQUIRE(verts.size() == 6);
    REQUIRE(faces.size() == 8);
    const double edge = OctahedronSpec::perplexbrot(3).edge;
    for (const auto& f : faces) {
        std::array<double, 3> normal{};
        for (int e = 0; e < 3; ++e) {
            const auto& a = verts[f[e] - 1];
            const auto& b = verts[f[(e + 1) % 3] - 1];
            CHECK(std::hypot(a[0] - b[0], a[1] - b[1], a[2] - b[2]) == doctest::Approx(edge).epsilon(1e-9));
        }
        // outward orientation: (b - a) x (c - a) points away from the origin
        const auto& a = verts[f[0] - 1];
        const auto& b = verts[f[1] - 1];
        const auto& c = verts[f[2] - 1];
        const std::array<double, 3> u{b[0] - a[0], b[1] - a[1], b[2] - a[2]}, v{c[0] - a[0], c[1] - a[1], c[2] - a[2]};
        normal = {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
        CHECK(normal[0] * a[0] + normal[1] * a[1] + normal[2] * a[2] > 0.0);
    }
}

TEST_CASE("fixed formatting") {
    CHECK(format_fixed(0.0) == "0.000000000");
    CHECK(format_fixed(-1.5) == "-1.500000000");
    CHECK(format_fixed(2.0 / (3.0 * std::sqrt(3.0))) == "0.384900179");
}

TEST_CASE("CSV quoting") {
    CsvWriter csv({"a", "b"});
    csv.add_row({"1", "x,y"});
    csv.add_row({"say \"hi\"", ""});
    CHECK(csv.str() == "a,b\n1,\"x,y\"\n\"say \"\"hi\"\"\",\n");
}

TEST_CASE("writers report the path on failure") {
    const std::filesystem::path bad = "/nonexistent-dir/x.ppm";
    try {
        write_ppm(one_cell(0, 1), bad);
        FAIL("expected an exception");
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()).find("/nonexistent-dir/x.ppm") != std::string::npos);
    }
    CHECK_THROWS_AS(read_vox("/nonexistent-dir/x.vox"), std::runtime_error);
}

TEST_CASE("golden renders are reproduced byte for byte") {
    const Raster2D h3 = scan2d(PlaneKind::Hyperbrot, 3, Window2D::square(-1, 1, 512), 1000);
    CHECK(ppm_bytes(h3) == read_file(kGolden / "hyperbrot_p3_512.ppm"));
    const Raster3D p3 = scan3d(SliceSpec(Unit::One, Unit::J1, Unit::J2), 3, Window3D::cube(-1, 1, 48), 1000);
    CHECK(vox_bytes(p3) == read_file(kGolden / "perplexbrot_p3_48.vox"));
}
