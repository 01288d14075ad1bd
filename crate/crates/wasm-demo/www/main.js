import init, { analyze, tower, lattice_plot } from './pkg/qonash_wasm.js';

const SAMPLE = {
  schema_version: 1,
  dim: 2,
  branches: [
    { label: 'a1', char_exponents: [[[1, 2], [1, 2]]], sing_faces: [[1, 2]] },
  ],
};

const $ = (id) => document.getElementById(id);

function show(el, fn) {
  try {
    el.classList.remove('error');
    el.textContent = fn();
  } catch (e) {
    el.classList.add('error');
    el.textContent = describe(e);
  }
}

function describe(e) {
  try {
    const err = JSON.parse(e).error;
    return `error[${err.code}]: ${err.message}`;
  } catch {
    return String(e);
  }
}

function drawPlot() {
  const msg = $('plot-msg');
  const canvas = $('plot');
  const ctx = canvas.getContext('2d');
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  let data;
  try {
    data = JSON.parse(lattice_plot($('plot-exps').value, Number($('plot-bound').value)));
    msg.textContent = '';
    msg.classList.remove('error');
  } catch (e) {
    msg.textContent = describe(e);
    msg.classList.add('error');
    return;
  }
  const pad = 24;
  const step = (canvas.width - 2 * pad) / data.bound;
  const at = ([x, y]) => [pad + x * step, canvas.height - pad - y * step];

  ctx.strokeStyle = '#ddd';
  for (let i = 0; i <= data.bound; i++) {
    const [x0, y0] = at([i, 0]);
    const [x1, y1] = at([0, i]);
    ctx.beginPath(); ctx.moveTo(x0, y0); ctx.lineTo(x0, pad); ctx.stroke();
    ctx.beginPath(); ctx.moveTo(pad, y1); ctx.lineTo(canvas.width - pad, y1); ctx.stroke();
  }
  const dot = (p, r, color) => {
    const [x, y] = at(p);
    ctx.fillStyle = color;
    ctx.beginPath(); ctx.arc(x, y, r, 0, 2 * Math.PI); ctx.fill();
  };
  const inBox = ([x, y]) => x <= data.bound && y <= data.bound;

  data.points.forEach((p) => dot(p, 2.5, '#888'));
  data.edges.filter(inBox).forEach((p) => dot(p, 5, '#1565c0'));
  data.barycenters.map((b) => b.point).filter(inBox).forEach((p) => {
    const [x, y] = at(p);
    ctx.fillStyle = '#2e7d32';
    ctx.fillRect(x - 5, y - 5, 10, 10);
  });
  data.s_min.filter(inBox).forEach((p) => {
    const [x, y] = at(p);
    ctx.fillStyle = '#c62828';
    ctx.beginPath();
    ctx.moveTo(x, y - 7); ctx.lineTo(x + 7, y); ctx.lineTo(x, y + 7); ctx.lineTo(x - 7, y);
    ctx.fill();
  });
  if (data.s_min.length) {
    msg.textContent = 'minimal singular vectors: ' + data.s_min.map((p) => `(${p})`).join(' ');
  }
}

await init();
$('analyze-in').value = JSON.stringify(SAMPLE, null, 2);
$('tower-run').onclick = () =>
  show($('tower-out'), () =>
    JSON.stringify(JSON.parse(tower($('tower-exps').value, Number($('tower-dim').value))), null, 2));
$('analyze-run').onclick = () => show($('analyze-out'), () => analyze($('analyze-in').value));
$('plot-run').onclick = drawPlot;
drawPlot();
