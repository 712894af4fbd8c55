import init, { diagram_of, permutation_of, quotient } from "./pkg/noncrossing_wasm.js";

const $ = (id) => document.getElementById(id);

function guarded(errorId, action) {
  return () => {
    $(errorId).textContent = "";
    try {
      action();
    } catch (e) {
      $(errorId).textContent = e.message ?? String(e);
    }
  };
}

const drawPermutation = guarded("perm-error", () => {
  const r = JSON.parse(diagram_of($("perm").value));
  $("perm-svg").innerHTML = r.svg;
  $("perm-ascii").textContent = r.ascii;
  $("perm-text").textContent =
    `${r.diagram}\n\ndescents at ${r.descents.join(", ") || "none"}`;
});

const invertDiagram = guarded("diagram-error", () => {
  const r = JSON.parse(permutation_of($("diagram").value));
  $("diagram-svg").innerHTML = r.svg;
  $("diagram-result").textContent = `permutation ${r.permutation}\n\n${r.diagram}`;
});

const countQuotient = guarded("q-error", () => {
  const r = JSON.parse(quotient(Number($("q-n").value), $("q-name").value, $("q-perm").value));
  const rows = r.counts.map((c, k) => `<tr><td>${k}</td><td>${c}</td></tr>`).join("");
  $("q-table").innerHTML =
    `<tr><th>arcs</th><th>diagrams</th></tr>${rows}<tr><th>total</th><th>${r.total}</th></tr>`;
  $("q-projection").innerHTML = r.projection
    ? `<p>bottom of the class: ${r.projection}</p>${r.projection_svg}`
    : "";
});

await init();
$("perm-go").addEventListener("click", drawPermutation);
$("diagram-go").addEventListener("click", invertDiagram);
$("q-go").addEventListener("click", countQuotient);
for (const [id, run] of [["perm", drawPermutation], ["q-perm", countQuotient]]) {
  $(id).addEventListener("keydown", (e) => e.key === "Enter" && run());
}
drawPermutation();
invertDiagram();
countQuotient();
