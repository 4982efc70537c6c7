#include "mpde/snapshot.hpp"

#include <cstring>
#include <fstream>

#include <json.hpp>

#include "mpde/norms.hpp"

namespace mpde {

namespace {

void put_u32(std::ostream& os, std::uint32_t v) {
    unsigned char b[4];
    for (int i = 0; i < 4; ++i)
        b[i] = static_cast<unsigned char>((v >> (8 * i)) & 0xff);
    os.write(reinterpret_cast<const char*>(b), 4);
}

void put_f64(std::ostream& os, double v) {
    std::uint64_t u;
    std::memcpy(&u, &v, 8);
    unsigned char b[8];
    for (int i = 0; i < 8; ++i)
        b[i] = static_cast<unsigned char>((u >> (8 * i)) & 0xff);
    os.write(reinterpret_cast<const char*>(b), 8);
}

std::uint32_t get_u32(std::istream& is) {
    unsigned char b[4];
    is.read(reinterpret_cast<char*>(b), 4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i)
        v |= static_cast<std::uint32_t>(b[i]) << (8 * i);
    return v;
}

double get_f64(std::istream& is) {
    unsigned char b[8];
    is.read(reinterpret_cast<char*>(b), 8);
    std::uint64_t u = 0;
    for (int i = 0; i < 8; ++i)
        u |= static_cast<std::uint64_t>(b[i]) << (8 * i);
    double v;
    std::memcpy(&v, &u, 8);
    return v;
}

}  // namespace

void write_snapshot(const std::filesystem::path& path, const Field& f) {
    std::ofstream os(path, std::ios::binary);
    if (!os)
        throw std::runtime_error("write_snapshot: cannot open " + path.string());
    os.write("MPDE", 4);
    put_u32(os, snapshot_version);
    put_u32(os, static_cast<std::uint32_t>(f.grid().dim()));
    put_u32(os, static_cast<std::uint32_t>(f.grid().points()));
    put_f64(os, f.grid().half_width());
    put_u32(os, f.rep() == Rep::fourier ? 1u : 0u);
    for (const auto& c : f.values()) {
        put_f64(os, c.real());
        put_f64(os, c.imag());
    }
    if (!os)
        throw std::runtime_error("write_snapshot: write failed for " + path.string());
}

Field read_snapshot(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is)
        throw std::runtime_error("read_snapshot: cannot open " + path.string());
    char magic[4];
    is.read(magic, 4);
    if (!is || std::memcmp(magic, "MPDE", 4) != 0)
        throw std::runtime_error("read_snapshot: bad magic in " + path.string());
    std::uint32_t ver = get_u32(is);
    if (ver != snapshot_version)
        throw std::runtime_error("read_snapshot: unsupported version in " + path.string());
    int dim = static_cast<int>(get_u32(is));
    int points = static_cast<int>(get_u32(is));
    double L = get_f64(is);
    std::uint32_t rep_flag = get_u32(is);
    if (rep_flag > 1)
        throw std::runtime_error("read_snapshot: bad representation flag");
    Grid grid(dim, points, L);
    std::vector<cplx> v(grid.size());
    for (auto& c : v) {
        double re = get_f64(is);
        double im = get_f64(is);
        c = cplx(re, im);
    }
    if (!is)
        throw std::runtime_error("read_snapshot: truncated file " + path.string());
    return Field(grid, rep_flag ? Rep::fourier : Rep::physical, std::move(v));
}

void write_sidecar(const std::filesystem::path& snapshot_path, const std::string& model,
                   double time, const std::string& parameters) {
    nlohmann::json j;
    j["model"] = model;
    j["time"] = time;
    j["parameters"] = parameters;
    std::filesystem::path p = snapshot_path;
    p.replace_extension(".json");
    std::ofstream os(p);
    os << j.dump(2) << "\n";
}

void write_trajectory(const std::filesystem::path& dir, const Trajectory& traj,
                      const WindowFamily& w) {
    std::filesystem::create_directories(dir);
    std::ofstream index(dir / "index.csv");
    index << "stamp_index,time,file,l2_norm,m21_norm\n";
    index.precision(17);
    char name[32];
    for (std::size_t i = 0; i < traj.size(); ++i) {
        std::snprintf(name, sizeof(name), "stamp_%05zu.mpde", i);
        write_snapshot(dir / name, traj.snapshots[i]);
        double l2 = lp_norm(traj.snapshots[i], 2.0);
        double m21 = modulation_norm(to_fourier(traj.snapshots[i]), {SpaceKind::m21, 0.0}, w);
        index << i << "," << traj.times[i] << "," << name << "," << l2 << "," << m21 << "\n";
    }
}

}  // namespace mpde
