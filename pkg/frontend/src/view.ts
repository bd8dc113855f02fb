import type { Customization } from "./state.js";
import { toGrid, visibleRows } from "./table.js";
import type { CellValue, ComparePayload, ResourceStatements } from "./types.js";

export interface TableHandlers {
  onHide(groupId: string): void;
  onResource(resourceId: string): void;
}

function cellNode(values: CellValue[], handlers: TableHandlers): HTMLTableCellElement {
  const td = document.createElement("td");
  if (values.length === 0) {
    td.textContent = "-";
    return td;
  }
  values.forEach((value, i) => {
    if (i > 0) {
      td.appendChild(document.createTextNode("; "));
    }
    if (value.kind === "resource" && value.resource) {
      const link = document.createElement("a");
      link.href = "#";
      link.dataset.resource = value.resource;
      link.textContent = value.display;
      link.addEventListener("click", (event) => {
        event.preventDefault();
        handlers.onResource(value.resource as string);
      });
      td.appendChild(link);
    } else {
      td.appendChild(document.createTextNode(value.display));
    }
  });
  return td;
}

/**
 * Renders the comparison table. The untransposed layout is one row per
 * property group with a hide button; the transposed layout is rendered
 * from the plain string grid since per-cell controls only exist in the
 * property-per-row orientation.
 */
export function renderTable(
  container: HTMLElement,
  payload: ComparePayload,
  custom: Customization,
  handlers: TableHandlers,
): void {
  container.replaceChildren();
  const table = document.createElement("table");
  table.className = "comparison";
  table.dataset.transposed = String(custom.transposed);

  if (custom.transposed) {
    for (const line of toGrid(payload, custom)) {
      const tr = document.createElement("tr");
      for (const text of line) {
        const td = document.createElement("td");
        td.textContent = text;
        tr.appendChild(td);
      }
      table.appendChild(tr);
    }
    container.appendChild(table);
    return;
  }

  const head = document.createElement("tr");
  for (const text of ["Property", ...payload.papers.map((p) => p.title)]) {
    const th = document.createElement("th");
    th.textContent = text;
    head.appendChild(th);
  }
  head.appendChild(document.createElement("th"));
  table.appendChild(head);

  for (const row of visibleRows(payload, custom)) {
    const tr = document.createElement("tr");
    tr.dataset.group = row.id;
    const th = document.createElement("th");
    th.textContent = row.label;
    tr.appendChild(th);
    for (const paper of payload.papers) {
      tr.appendChild(cellNode(payload.values[row.id]?.[paper.contributions[0]] ?? [], handlers));
    }
    const controls = document.createElement("td");
    const hideButton = document.createElement("button");
    hideButton.className = "hide-row";
    hideButton.textContent = "Hide";
    hideButton.addEventListener("click", () => handlers.onHide(row.id));
    controls.appendChild(hideButton);
    tr.appendChild(controls);
    table.appendChild(tr);
  }
  container.appendChild(table);
}

/** Statement popup for a resource cell. */
export function renderStatementPopup(container: HTMLElement, data: ResourceStatements): void {
  container.replaceChildren();
  container.classList.remove("hidden");
  const heading = document.createElement("h3");
  heading.textContent = data.label;
  container.appendChild(heading);
  const list = document.createElement("ul");
  list.className = "statements";
  for (const statement of data.statements) {
    const item = document.createElement("li");
    item.textContent = `${statement.predicate}: ${statement.object}`;
    list.appendChild(item);
  }
  container.appendChild(list);
  const close = document.createElement("button");
  close.className = "close-popup";
  close.textContent = "Close";
  close.addEventListener("click", () => {
    container.classList.add("hidden");
    container.replaceChildren();
  });
  container.appendChild(close);
}

export interface PublishHandlers {
  onPublish(title: string, description: string): Promise<void>;
}

/** Publish form: the submit button stays disabled until a title is typed. */
export function renderPublishForm(container: HTMLElement, handlers: PublishHandlers): void {
  container.replaceChildren();

  const title = document.createElement("input");
  title.type = "text";
  title.name = "title";
  title.placeholder = "Title (required)";

  const description = document.createElement("input");
  description.type = "text";
  description.name = "description";
  description.placeholder = "Description";

  const submit = document.createElement("button");
  submit.className = "publish";
  submit.textContent = "Publish";
  submit.disabled = true;

  const hint = document.createElement("span");
  hint.className = "validation-hint";
  hint.textContent = "A title is required.";

  const result = document.createElement("p");
  result.className = "permalink hidden";

  title.addEventListener("input", () => {
    const missing = title.value.trim() === "";
    submit.disabled = missing;
    hint.classList.toggle("hidden", !missing);
  });
  submit.addEventListener("click", async () => {
    await handlers.onPublish(title.value.trim(), description.value.trim());
  });

  container.appendChild(title);
  container.appendChild(description);
  container.appendChild(submit);
  container.appendChild(hint);
  container.appendChild(result);
}

export function showPermalink(container: HTMLElement, permalink: string): void {
  const result = container.querySelector<HTMLElement>(".permalink");
  if (!result) {
    return;
  }
  result.classList.remove("hidden");
  result.textContent = permalink;
}
