import init, { evaluate, render_field, voigt_profile, FieldMode } from "./pkg/fadsamp_web.js";

const REGIMES = ["continued fraction", "shifted rational form", "pole-free form"];
const $ = (id) => document.getElementById(id);
const num = (id) => parseFloat($(id).value);

function describe(x, y) {
  try {
    const e = evaluate(x, y);
    const err = Number.isNaN(e.log10_error) ? "n/a" : `1e${e.log10_error.toFixed(2)}`;
    return `z = ${x} ${y < 0 ? "-" : "+"} ${Math.abs(y)}i\n` +
      `w = ${e.re} ${e.im < 0 ? "-" : "+"} ${Math.abs(e.im)}i\n` +
      `regime: ${REGIMES[e.regime]}${e.reflected ? " (via reflection)" : ""}\n` +
      `relative error vs reference: ${err}`;
  } catch (err) {
    return `error: ${err.message ?? err}`;
  }
}

function legend(mode) {
  const el = $("legend");
  if (mode === "Regime") {
    const items = [["rgb(70,110,170)", "|z| > 8"], ["rgb(235,180,70)", "y > 0.05|x|"], ["rgb(200,70,80)", "y ≤ 0.05|x|"]];
    el.innerHTML = items.map(([c, t]) => `<span style="background:${c}"></span>${t}`).join("");
  } else if (mode.startsWith("Error")) {
    el.innerHTML = `<span style="background:linear-gradient(90deg,#0d0887,#7e03a8,#cc4778,#f89540,#f0f921);width:12rem"></span>` +
      "1e-17 … 1e-11";
  } else {
    el.innerHTML = "hue: arg w, lightness: |w|";
  }
}

let view = null;

function render() {
  const mode = $("mode").value;
  const n = Math.max(16, Math.min(1024, Math.round(num("res"))));
  const [xmin, xmax, ymin, ymax] = ["xmin", "xmax", "ymin", "ymax"].map(num);
  const canvas = $("field");
  canvas.width = n;
  canvas.height = n;
  const t0 = performance.now();
  try {
    const px = render_field(FieldMode[mode], xmin, xmax, ymin, ymax, n, n);
    canvas.getContext("2d").putImageData(new ImageData(new Uint8ClampedArray(px), n, n), 0, 0);
    view = { xmin, xmax, ymin, ymax, n };
    $("readout").textContent = `${n}×${n} pixels in ${(performance.now() - t0).toFixed(0)} ms. Click to evaluate.`;
  } catch (err) {
    $("readout").textContent = `error: ${err.message ?? err}`;
  }
  legend(mode);
}

function drawVoigt() {
  const y = Math.pow(10, num("vy"));
  const half = Math.abs(num("vx")) || 6;
  $("vy-val").textContent = y.toPrecision(3);
  const canvas = $("voigt");
  const ctx = canvas.getContext("2d");
  const n = canvas.width;
  const k = voigt_profile(-half, half, n, y);
  const peak = Math.max(...k);
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  ctx.strokeStyle = "#bbb";
  ctx.beginPath();
  ctx.moveTo(n / 2, 0);
  ctx.lineTo(n / 2, canvas.height);
  ctx.stroke();
  ctx.strokeStyle = "#1f5fa8";
  ctx.lineWidth = 2;
  ctx.beginPath();
  k.forEach((v, i) => {
    const py = canvas.height - 10 - (canvas.height - 20) * v / peak;
    if (i === 0) ctx.moveTo(i, py); else ctx.lineTo(i, py);
  });
  ctx.stroke();
  ctx.fillStyle = "#222";
  ctx.fillText(`K(0, y) = ${k[Math.floor(n / 2)].toPrecision(6)}`, 8, 16);
}

await init();
$("eval").addEventListener("click", () => { $("point-out").textContent = describe(num("px"), num("py")); });
$("render").addEventListener("click", render);
$("field").addEventListener("click", (ev) => {
  if (!view) return;
  const r = ev.target.getBoundingClientRect();
  const x = view.xmin + (view.xmax - view.xmin) * (ev.clientX - r.left) / r.width;
  const y = view.ymax - (view.ymax - view.ymin) * (ev.clientY - r.top) / r.height;
  $("readout").textContent = describe(+x.toPrecision(8), +y.toPrecision(8));
});
$("vy").addEventListener("input", drawVoigt);
$("vx").addEventListener("change", drawVoigt);
$("point-out").textContent = describe(1, 1);
render();
drawVoigt();
