import init, { gamma, psiCurve, checkMembership } from "./pkg/lefschetz_web.js";

const $ = (id) => document.getElementById(id);
const frac = (f) => (f.den === 1 ? `${f.num}` : `${f.num}/${f.den}`);

function fail(target, err) {
  target.innerHTML = `<p class="error">${String(err)}</p>`;
}

function runGamma() {
  const out = $("gamma-out");
  let r;
  try {
    r = JSON.parse(gamma($("product").value));
  } catch (e) {
    return fail(out, e);
  }
  const best = r.argmax.join(",");
  const rows = r.audit
    .map((s) => {
      const cls = s.subset.join(",") === best ? ' class="best"' : "";
      return `<tr${cls}><td>{${s.subset.join(", ")}}</td><td>${frac(s.value)}</td><td>${s.decimal.toFixed(6)}</td></tr>`;
    })
    .join("");
  const verdicts = r.lefschetz.factors
    .map((f, i) => `<li>factor ${i + 1}: <b>${f.status}</b>${f.criterion ? ` (${f.criterion})` : ""}</li>`)
    .join("");
  out.innerHTML = `
    <p class="big">γ = ${frac(r.gamma)} ≈ ${r.decimal.toFixed(6)}, attained on {${best}}</p>
    <p>Lefschetz check: <b>${r.lefschetz.status}</b></p><ul>${verdicts}</ul>
    <table><tr><th>subset</th><th>fraction</th><th>decimal</th></tr>${rows}</table>`;
}

function runPsi() {
  const out = $("psi-out");
  let r;
  try {
    r = JSON.parse(psiCurve(Number($("psi-h").value), Number($("psi-e").value), Number($("psi-delta").value)));
  } catch (e) {
    return fail(out, e);
  }
  const w = 640, h = 240, pad = 36;
  const xs = r.points.map((p) => p.rank);
  const ys = r.points.map((p) => p.decimal);
  const ymax = Math.max(r.max_decimal, ...ys) * 1.1;
  const sx = (x) => pad + ((x - 1) / Math.max(1, xs.length - 1)) * (w - 2 * pad);
  const sy = (y) => h - pad - (y / ymax) * (h - 2 * pad);
  const path = r.points.map((p, i) => `${i ? "L" : "M"}${sx(p.rank)},${sy(p.decimal)}`).join(" ");
  const dots = r.points
    .map((p) => `<circle cx="${sx(p.rank)}" cy="${sy(p.decimal)}" r="3"><title>r = ${p.rank}: ${frac(p.psi)}</title></circle>`)
    .join("");
  out.innerHTML = `
    <p>maximum over the regime: <b>${frac(r.max)}</b> ≈ ${r.max_decimal.toFixed(6)}</p>
    <svg width="${w}" height="${h}" viewBox="0 0 ${w} ${h}">
      <line x1="${pad}" y1="${sy(r.max_decimal)}" x2="${w - pad}" y2="${sy(r.max_decimal)}" stroke="#c77" stroke-dasharray="4 3"/>
      <path d="${path}" fill="none" stroke="#246"/>${dots}
      <text x="${pad}" y="${h - 8}" font-size="12">rank 1</text>
      <text x="${w - pad}" y="${h - 8}" font-size="12" text-anchor="end">rank ${xs[xs.length - 1]}</text>
    </svg>`;
}

function runSet() {
  const out = $("set-out");
  let r;
  try {
    r = JSON.parse(checkMembership($("set-name").value, $("set-x").value));
  } catch (e) {
    return fail(out, e);
  }
  out.innerHTML = r.member
    ? `<p><b>${r.value}</b> is a member: <code>${r.formula}</code></p>`
    : `<p><b>${r.value}</b> is not a member.</p>`;
}

await init();
$("status").textContent = "Ready.";
$("gamma-run").addEventListener("click", runGamma);
for (const id of ["psi-h", "psi-e", "psi-delta"]) $(id).addEventListener("input", runPsi);
for (const id of ["set-name", "set-x"]) $(id).addEventListener("input", runSet);
runGamma();
runPsi();
runSet();
