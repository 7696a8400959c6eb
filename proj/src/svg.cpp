#include "netbayes/svg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "netbayes/gof.hpp"

namespace netbayes {

namespace {

// Minimal SVG canvas with data-space -> pixel mapping per panel.
class SvgCanvas {
 public:
  SvgCanvas(int width, int height) : w_(width), h_(height) {
    body_ << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w_
          << "\" height=\"" << h_ << "\" viewBox=\"0 0 " << w_ << ' ' << h_
          << "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  }

  void line(double x1, double y1, double x2, double y2, const std::string& col,
            double sw = 1.0) {
    body_ << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2
          << "\" y2=\"" << y2 << "\" stroke=\"" << col << "\" stroke-width=\""
          << sw << "\"/>\n";
  }

  void rect(double x, double y, double w, double h, const std::string& fill,
            const std::string& stroke = "black") {
    body_ << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << w
          << "\" height=\"" << h << "\" fill=\"" << fill << "\" stroke=\""
          << stroke << "\"/>\n";
  }

  void circle(double x, double y, double r, const std::string& fill) {
    body_ << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"" << r
          << "\" fill=\"" << fill << "\" stroke=\"black\" stroke-width=\"0.5\"/>\n";
  }

  void polyline(const std::vector<std::pair<double, double>>& pts,
                const std::string& col, double sw = 1.5) {
    if (pts.empty()) return;
    body_ << "<polyline fill=\"none\" stroke=\"" << col
          << "\" stroke-width=\"" << sw << "\" points=\"";
    for (const auto& [x, y] : pts) body_ << x << ',' << y << ' ';
    body_ << "\"/>\n";
  }

  void text(double x, double y, const std::string& s, int size = 11,
            const std::string& anchor = "start") {
    body_ << "<text x=\"" << x << "\" y=\"" << y << "\" font-size=\"" << size
          << "\" font-family=\"sans-serif\" text-anchor=\"" << anchor << "\">"
          << s << "</text>\n";
  }

  void save(const std::string& path) {
    std::ofstream out(path);
    out << body_.str() << "</svg>\n";
  }

 private:
  int w_, h_;
  std::ostringstream body_;
};

struct Frame {
  double px, py, pw, ph;      // pixel rect
  double x0, x1, y0, y1;      // data range
  double X(double x) const { return px + (x - x0) / (x1 - x0 + 1e-300) * pw; }
  double Y(double y) const { return py + ph - (y - y0) / (y1 - y0 + 1e-300) * ph; }
};

void draw_frame(SvgCanvas& c, const Frame& f, const std::string& title) {
  c.rect(f.px, f.py, f.pw, f.ph, "none", "black");
  c.text(f.px + f.pw / 2, f.py - 6, title, 12, "middle");
}

}  // namespace

void svg_gof_panel(const GofFamily& fam, const std::string& title,
                   const std::string& path) {
  const int n_bins = static_cast<int>(fam.observed.size());
  const int width = std::max(480, 30 * n_bins + 120), height = 360;
  SvgCanvas c(width, height);
  double ymax = 1.0;
  for (int b = 0; b < n_bins; ++b) {
    ymax = std::max(ymax, fam.qmax[b]);
    ymax = std::max(ymax, fam.observed[b]);
  }
  Frame f{60, 40, width - 90.0, height - 100.0, -0.5, n_bins - 0.5, 0, ymax * 1.05};
  draw_frame(c, f, title);
  for (int b = 0; b < n_bins; ++b) {
    const double cx = f.X(b);
    const double bw = f.pw / n_bins * 0.45;
    // whiskers + interquartile box + median
    c.line(cx, f.Y(fam.qmin[b]), cx, f.Y(fam.qmax[b]), "gray");
    c.rect(cx - bw / 2, f.Y(fam.q75[b]), bw,
           std::max(1.0, f.Y(fam.q25[b]) - f.Y(fam.q75[b])), "#d8d8d8");
    c.line(cx - bw / 2, f.Y(fam.q50[b]), cx + bw / 2, f.Y(fam.q50[b]), "black", 1.5);
    if (b % std::max(1, n_bins / 12) == 0)
      c.text(cx, f.py + f.ph + 16, fam.bin_labels[b], 10, "middle");
  }
  std::vector<std::pair<double, double>> obs;
  for (int b = 0; b < n_bins; ++b) obs.emplace_back(f.X(b), f.Y(fam.observed[b]));
  c.polyline(obs, "red", 2.0);
  c.text(60, height - 16, "red: observed network; boxes: simulated networks", 11);
  c.save(path);
}

void svg_diagnostics(const PosteriorDraws& draws, const SummaryReport& rep,
                     const std::string& path) {
  const int p = draws.p;
  const int panel_w = 300, panel_h = 200, margin = 50;
  SvgCanvas c(3 * panel_w + 2 * margin, p * panel_h + margin);
  for (int k = 0; k < p; ++k) {
    // pooled draws for this parameter
    std::vector<double> pooled;
    pooled.reserve(static_cast<size_t>(draws.n_chains) * draws.kept_iters);
    for (int ch = 0; ch < draws.n_chains; ++ch)
      for (int t = 0; t < draws.kept_iters; ++t)
        pooled.push_back(draws.at(ch, t, k));
    const std::string name = rep.param_names[k];

    // density
    const auto dens = kernel_density(pooled);
    double dymax = 0;
    for (double v : dens.y) dymax = std::max(dymax, v);
    Frame fd{40.0, 30.0 + k * panel_h, panel_w - 60.0, panel_h - 60.0,
             dens.x.front(), dens.x.back(), 0, dymax * 1.05};
    draw_frame(c, fd, name + " density");
    std::vector<std::pair<double, double>> dp;
    for (size_t g = 0; g < dens.x.size(); ++g)
      dp.emplace_back(fd.X(dens.x[g]), fd.Y(dens.y[g]));
    c.polyline(dp, "black");

    // trace (chains concatenated)
    const auto [mn, mx] = std::minmax_element(pooled.begin(), pooled.end());
    Frame ft{40.0 + panel_w, 30.0 + k * panel_h, panel_w - 60.0, panel_h - 60.0,
             0, static_cast<double>(pooled.size()), *mn, *mx};
    draw_frame(c, ft, name + " trace");
    std::vector<std::pair<double, double>> tp;
    const size_t step = std::max<size_t>(1, pooled.size() / 2000);
    for (size_t t = 0; t < pooled.size(); t += step)
      tp.emplace_back(ft.X(static_cast<double>(t)), ft.Y(pooled[t]));
    c.polyline(tp, "steelblue", 0.8);

    // autocorrelation
    Frame fa{40.0 + 2 * panel_w, 30.0 + k * panel_h, panel_w - 60.0,
             panel_h - 60.0, 0, static_cast<double>(rep.lag), -0.2, 1.0};
    draw_frame(c, fa, name + " acf");
    c.line(fa.X(0), fa.Y(0), fa.X(rep.lag), fa.Y(0), "gray", 0.7);
    for (int l = 0; l <= rep.lag; ++l) {
      const double a = rep.acf[k][l];
      if (std::isnan(a)) continue;
      c.line(fa.X(l), fa.Y(0), fa.X(l), fa.Y(a), "black", 1.2);
    }
  }
  c.save(path);
}

void svg_latent_plot(const Graph& g, const Eigen::MatrixXd& Z,
                     const std::vector<int>& labels, const std::string& title,
                     const std::string& path) {
  static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                  "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};
  const int width = 560, height = 560;
  SvgCanvas c(width, height);
  double x0 = Z.col(0).minCoeff(), x1 = Z.col(0).maxCoeff();
  double y0 = Z.cols() > 1 ? Z.col(1).minCoeff() : -1.0;
  double y1 = Z.cols() > 1 ? Z.col(1).maxCoeff() : 1.0;
  const double padx = 0.07 * (x1 - x0 + 1e-9), pady = 0.07 * (y1 - y0 + 1e-9);
  Frame f{40, 40, width - 80.0, height - 80.0, x0 - padx, x1 + padx, y0 - pady,
          y1 + pady};
  draw_frame(c, f, title);
  auto yi = [&](int i) { return Z.cols() > 1 ? Z(i, 1) : 0.0; };
  for (const auto& [i, j] : g.edges())
    c.line(f.X(Z(i, 0)), f.Y(yi(i)), f.X(Z(j, 0)), f.Y(yi(j)), "#b0b0b0", 0.6);
  for (int i = 0; i < g.n(); ++i) {
    const int lab = labels.empty() ? 0 : labels[i];
    c.circle(f.X(Z(i, 0)), f.Y(yi(i)), 4.5, palette[lab % 8]);
  }
  c.save(path);
}

}  // namespace netbayes
