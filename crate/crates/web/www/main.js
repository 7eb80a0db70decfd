import init, { errorCurve, integrandProfile, solutionField } from "./pkg/fracpow_demo.js";

const $ = (id) => document.getElementById(id);
const num = (id) => Number($(id).value);

function axes(ctx, w, h, pad) {
  ctx.clearRect(0, 0, w, h);
  ctx.strokeStyle = "#888";
  ctx.strokeRect(pad, pad / 2, w - 1.5 * pad, h - 1.5 * pad);
}

function line(canvas, xs, ys, { logX = false, logY = false } = {}) {
  const ctx = canvas.getContext("2d");
  const { width: w, height: h } = canvas;
  const pad = 48;
  const fx = logX ? Math.log10 : (v) => v;
  const fy = logY ? (v) => Math.log10(Math.max(v, 1e-300)) : (v) => v;
  const X = Array.from(xs, fx);
  const Y = Array.from(ys, fy);
  const [x0, x1] = [Math.min(...X), Math.max(...X)];
  let [y0, y1] = [Math.min(...Y), Math.max(...Y)];
  if (y1 === y0) y1 = y0 + 1;
  const px = (v) => pad + ((v - x0) / (x1 - x0)) * (w - 1.5 * pad);
  const py = (v) => h - pad + ((y0 - v) / (y1 - y0)) * (h - 1.5 * pad);

  axes(ctx, w, h, pad);
  ctx.fillStyle = "#333";
  ctx.font = "11px sans-serif";
  const tick = (v, log) => (log ? `1e${v.toFixed(1)}` : v.toPrecision(3));
  ctx.fillText(tick(y1, logY), 2, pad / 2 + 10);
  ctx.fillText(tick(y0, logY), 2, h - pad);
  ctx.fillText(tick(x0, logX), pad, h - pad + 16);
  ctx.fillText(tick(x1, logX), w - pad, h - pad + 16);

  ctx.strokeStyle = "#1f5fa8";
  ctx.beginPath();
  X.forEach((x, i) => (i ? ctx.lineTo(px(x), py(Y[i])) : ctx.moveTo(px(x), py(Y[i]))));
  ctx.stroke();
}

function heatmap(canvas, n, y) {
  const m = n - 1;
  const ctx = canvas.getContext("2d");
  const img = ctx.createImageData(m, m);
  const lo = Math.min(...y);
  for (let i2 = 0; i2 < m; i2++) {
    for (let i1 = 0; i1 < m; i1++) {
      // Storage is x1 fastest from the bottom row; the image starts at the top.
      const s = (y[i2 * m + i1] - lo) / (1 - lo || 1);
      const p = 4 * ((m - 1 - i2) * m + i1);
      img.data[p] = 255 * s;
      img.data[p + 1] = 80 + 100 * (1 - Math.abs(2 * s - 1));
      img.data[p + 2] = 255 * (1 - s);
      img.data[p + 3] = 255;
    }
  }
  const tmp = new OffscreenCanvas(m, m);
  tmp.getContext("2d").putImageData(img, 0, 0);
  ctx.imageSmoothingEnabled = false;
  ctx.drawImage(tmp, 0, 0, canvas.width, canvas.height);
}

function show(id, f) {
  try {
    f();
  } catch (e) {
    $(id).textContent = String(e);
  }
}

function drawCurve() {
  show("curve-out", () => {
    const c = errorCurve(num("c-alpha"), num("c-m"), num("c-kappa"), $("c-rule").value, $("c-repr").value, num("c-xmax"), 100);
    line($("curve"), c.x, c.error, { logX: true, logY: true });
    $("curve-out").textContent = `max error ${c.maxError.toExponential(6)} at x = ${c.argmaxX.toExponential(3)}`;
    c.free();
  });
}

function drawProfile() {
  show("curve-out", () => {
    const samples = 401;
    const v = integrandProfile(num("p-alpha"), num("p-kappa"), $("p-repr").value, num("p-x"), samples);
    const t = Array.from({ length: samples }, (_, i) => i / (samples - 1));
    line($("profile"), t, v);
  });
}

function drawField() {
  $("field-out").textContent = "solving...";
  setTimeout(() =>
    show("field-out", () => {
      const rule = $("s-rule").value;
      const f = solutionField(num("s-alpha"), num("s-m"), rule === "simpson" ? 5 : 3, rule, num("s-n"), $("s-rhs").value);
      heatmap($("field"), f.n, f.y);
      $("field-out").textContent =
        `max u = ${f.umax.toExponential(6)}\neps = ${f.eps.toExponential(3)}, eps_inf = ${f.epsInf.toExponential(3)}`;
      f.free();
    }),
  );
}

await init();
for (const id of ["c-alpha", "c-m", "c-kappa", "c-rule", "c-repr", "c-xmax"]) $(id).addEventListener("input", drawCurve);
for (const id of ["p-alpha", "p-kappa", "p-x", "p-repr"]) $(id).addEventListener("input", drawProfile);
$("s-run").addEventListener("click", drawField);
drawCurve();
drawProfile();
drawField();
