#include "dualwave/dump.hpp"

#include <cstring>
#include <fstream>
#include <sstream>

namespace dualwave {

namespace {

constexpr char kMagic[4] = {'D', 'M', 'F', '1'};
constexpr std::uint32_t kVersion = 1;

void put_u32(std::ostream& out, std::uint32_t v) {
  unsigned char b[4];
  for (int i = 0; i < 4; ++i) b[i] = static_cast<unsigned char>((v >> (8 * i)) & 0xFF);
  out.write(reinterpret_cast<const char*>(b), 4);
}

void put_u64(std::ostream& out, std::uint64_t v) {
  unsigned char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>((v >> (8 * i)) & 0xFF);
  out.write(reinterpret_cast<const char*>(b), 8);
}

void put_f64(std::ostream& out, double v) {
  std::uint64_t bits;
  std::memcpy(&bits, &v, 8);
  put_u64(out, bits);
}

struct Reader {
  std::istream& in;
  std::size_t offset = 0;

  void bytes(void* dst, std::size_t count, const char* what) {
    in.read(reinterpret_cast<char*>(dst), static_cast<std::streamsize>(count));
    if (static_cast<std::size_t>(in.gcount()) != count)
      throw FormatError(std::string("truncated file while reading ") + what,
                        offset + static_cast<std::size_t>(in.gcount()));
    offset += count;
  }
  std::uint32_t u32(const char* what) {
    unsigned char b[4];
    bytes(b, 4, what);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(b[i]) << (8 * i);
    return v;
  }
  std::uint64_t u64(const char* what) {
    unsigned char b[8];
    bytes(b, 8, what);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(b[i]) << (8 * i);
    return v;
  }
  double f64(const char* what) {
    std::uint64_t bits = u64(what);
    double v;
    std::memcpy(&v, &bits, 8);
    return v;
  }
};

}  // namespace

void dump_field(const Field& f, std::ostream& out) {
  validate(f);
  out.write(kMagic, 4);
  put_u32(out, kVersion);
  const unsigned char sector = f.sector == Sector::XT ? 0 : 1;
  out.put(static_cast<char>(sector));
  out.put(static_cast<char>(f.grid.axes()));
  for (int a = 0; a < f.grid.axes(); ++a) {
    const AxisSpec& ax = f.grid.axis(a);
    put_u64(out, ax.n);
    put_f64(out, ax.origin);
    put_f64(out, ax.spacing);
  }
  for (const cplx& z : f.samples) {
    put_f64(out, z.real());
    put_f64(out, z.imag());
  }
  if (!out) throw std::runtime_error("dump_field: write failure");
}

void dump_field(const Field& f, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("dump_field: cannot open " + path);
  dump_field(f, out);
}

Field load_field(std::istream& in) {
  Reader r{in};
  char magic[4];
  r.bytes(magic, 4, "magic");
  if (std::memcmp(magic, kMagic, 4) != 0)
    throw FormatError("bad magic, expected \"DMF1\"", 0);
  const std::size_t version_off = r.offset;
  const std::uint32_t version = r.u32("version");
  if (version != kVersion)
    throw FormatError("unsupported version " + std::to_string(version), version_off);
  const std::size_t sector_off = r.offset;
  unsigned char sector_tag;
  r.bytes(&sector_tag, 1, "sector tag");
  if (sector_tag > 1)
    throw FormatError("bad sector tag " + std::to_string(sector_tag), sector_off);
  const std::size_t axes_off = r.offset;
  unsigned char n_axes;
  r.bytes(&n_axes, 1, "axis count");
  if (n_axes < 1 || n_axes > 2)
    throw FormatError("bad axis count " + std::to_string(n_axes), axes_off);

  AxisSpec ax[2];
  for (int a = 0; a < n_axes; ++a) {
    ax[a].n = r.u64("n_points");
    ax[a].origin = r.f64("origin");
    ax[a].spacing = r.f64("spacing");
  }
  Grid grid = n_axes == 1 ? Grid(ax[0]) : Grid(ax[0], ax[1]);

  Field f;
  f.sector = sector_tag == 0 ? Sector::XT : Sector::KE;
  f.grid = grid;
  f.samples.resize(grid.size());
  for (cplx& z : f.samples) {
    const double re = r.f64("sample");
    const double im = r.f64("sample");
    z = cplx{re, im};
  }
  // trailing garbage is a length mismatch
  char extra;
  in.read(&extra, 1);
  if (in.gcount() == 1)
    throw FormatError("payload longer than declared sample count", r.offset);
  validate(f);
  return f;
}

Field load_field(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("load_field: cannot open " + path);
  return load_field(in);
}

}  // namespace dualwave
