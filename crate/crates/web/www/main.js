import init, { stampfli_point, numerical_range, norm_profile } from "./pkg/stampfli_web.js";

const c = (re, im = 0) => [re, im];
const upper3 = (x, y, z) => [[c(0), x, y], [c(0), c(0), z], [c(0), c(0), c(0)]];

const PRESETS = {
  "Nilpotent, zero corner": upper3(c(2, -1), c(0), c(0, 2)),
  "Three eigenvalues": [[c(2, 1), c(0), c(2, -2)], [c(0), c(0, 1), c(2)], [c(0), c(0), c(-5)]],
  "Equal moduli, complex": upper3(c(3, -4), c(-5), c(-4, 3)),
  "Nilpotent, general": upper3(c(1, -4), c(-3, -2), c(1, 5)),
  "Nilpotent (8, −1, 7)": upper3(c(8), c(-1), c(7)),
  "Nilpotent (8, −1, 7.5)": upper3(c(8), c(-1), c(7.5)),
  "Nilpotent (4, −2, 4)": upper3(c(4), c(-2), c(4)),
  "Circular, not orthogonal": [[c(0), c(1), c(1)], [c(0), c(0), c(1)], [c(0), c(0), c(-0.5)]],
  "Jordan block": [[c(0), c(1)], [c(0), c(0)]],
};

const $ = (id) => document.getElementById(id);
const canvas = $("plot");
const ctx = canvas.getContext("2d");

function readMatrix() {
  const rows = JSON.parse($("matrix").value);
  return JSON.stringify({ n: rows.length, data: rows });
}

function showPreset(name) {
  $("matrix").value = "[\n" + PRESETS[name].map((r) => "  " + JSON.stringify(r)).join(",\n") + "\n]";
}

// Square viewport around all drawn points with a 10% margin.
function viewport(points) {
  let [x0, x1, y0, y1] = [Infinity, -Infinity, Infinity, -Infinity];
  for (const [x, y] of points) {
    x0 = Math.min(x0, x); x1 = Math.max(x1, x);
    y0 = Math.min(y0, y); y1 = Math.max(y1, y);
  }
  const half = Math.max(x1 - x0, y1 - y0, 1e-6) * 0.6;
  const cx = (x0 + x1) / 2, cy = (y0 + y1) / 2;
  return { reMin: cx - half, reMax: cx + half, imMin: cy - half, imMax: cy + half };
}

function toPixel(v, [re, im]) {
  return [
    ((re - v.reMin) / (v.reMax - v.reMin)) * canvas.width,
    ((v.imMax - im) / (v.imMax - v.imMin)) * canvas.height,
  ];
}

function drawHeat(matrix, v) {
  const n = 120;
  const p = JSON.parse(norm_profile(matrix, v.reMin, v.reMax, v.imMin, v.imMax, n, n));
  const img = ctx.createImageData(n, n);
  const span = p.max - p.min || 1;
  for (let j = 0; j < n; j++) {
    for (let i = 0; i < n; i++) {
      const t = (p.values[j * n + i] - p.min) / span;
      const g = Math.round(255 - 120 * Math.sqrt(t));
      const k = ((n - 1 - j) * n + i) * 4;
      img.data.set([g, g, Math.min(255, g + 20), 255], k);
    }
  }
  const tmp = new OffscreenCanvas(n, n);
  tmp.getContext("2d").putImageData(img, 0, 0);
  ctx.imageSmoothingEnabled = true;
  ctx.drawImage(tmp, 0, 0, canvas.width, canvas.height);
}

function polygon(v, pts, color, width) {
  if (pts.length === 0) return;
  ctx.strokeStyle = color;
  ctx.lineWidth = width;
  ctx.beginPath();
  pts.forEach((p, k) => {
    const [x, y] = toPixel(v, p);
    k === 0 ? ctx.moveTo(x, y) : ctx.lineTo(x, y);
  });
  ctx.closePath();
  ctx.stroke();
}

function dot(v, p, color, r) {
  const [x, y] = toPixel(v, p);
  ctx.fillStyle = color;
  ctx.beginPath();
  ctx.arc(x, y, r, 0, 2 * Math.PI);
  ctx.fill();
}

function fmt([re, im]) {
  return `${re.toFixed(6)} ${im < 0 ? "−" : "+"} ${Math.abs(im).toFixed(6)}i`;
}

function compute() {
  const info = $("info");
  info.classList.remove("error");
  try {
    const matrix = readMatrix();
    const samples = Number($("samples").value);
    const st = JSON.parse(stampfli_point(matrix));
    const nr = JSON.parse(numerical_range(matrix, samples));
    const v = viewport([...nr.boundary, ...nr.eigenvalues]);

    ctx.clearRect(0, 0, canvas.width, canvas.height);
    if ($("heat").checked) drawHeat(matrix, v);
    polygon(v, nr.boundary, "#2a9d3a", 2);
    polygon(v, nr.w0, "#e07b00", 2);
    nr.eigenvalues.forEach((e) => dot(v, e, "#1f5fd1", 5));
    dot(v, nr.st, "#000", 5);

    info.textContent =
      `St(A)       ${fmt(st.point)}\n` +
      `‖A − St·I‖  ${st.min_norm.toFixed(9)}\n` +
      `method      ${st.method}\n` +
      `certificate ${st.certificate_margin.toExponential(3)}\n` +
      `spectrum    ${st.spectrum.map(fmt).join("\n            ")}`;
  } catch (e) {
    info.classList.add("error");
    info.textContent = String(e);
  }
}

await init();
for (const name of Object.keys(PRESETS)) $("preset").add(new Option(name, name));
$("preset").addEventListener("change", (e) => { showPreset(e.target.value); compute(); });
$("samples").addEventListener("input", (e) => { $("samplesOut").textContent = e.target.value; compute(); });
$("heat").addEventListener("change", compute);
$("run").addEventListener("click", compute);
$("samplesOut").textContent = $("samples").value;
showPreset("Nilpotent, general");
$("preset").value = "Nilpotent, general";
compute();
