import type { SimilarityHit } from "./types.js";

export interface SuggestionHandlers {
  inCart(contribution: string): boolean;
  onToggle(contribution: string): void;
  labelOf?(contribution: string): string;
}

/** The suggestion panel: one row per hit with a similarity percentage
 * badge and an "Add to comparison" checkbox. */
export function renderSuggestions(
  container: HTMLElement,
  hits: SimilarityHit[],
  handlers: SuggestionHandlers,
): void {
  container.replaceChildren();
  if (hits.length === 0) {
    const empty = document.createElement("p");
    empty.className = "empty-state";
    empty.textContent = "No similar contributions found.";
    container.appendChild(empty);
    return;
  }
  const list = document.createElement("ul");
  list.className = "suggestions";
  for (const hit of hits) {
    const item = document.createElement("li");
    item.dataset.contribution = hit.contribution;

    const name = document.createElement("span");
    name.className = "suggestion-label";
    name.textContent = handlers.labelOf ? handlers.labelOf(hit.contribution) : hit.contribution;

    const badge = document.createElement("span");
    badge.className = "badge";
    badge.textContent = `${hit.percentage}%`;

    const label = document.createElement("label");
    const checkbox = document.createElement("input");
    checkbox.type = "checkbox";
    checkbox.checked = handlers.inCart(hit.contribution);
    checkbox.addEventListener("change", () => handlers.onToggle(hit.contribution));
    label.appendChild(checkbox);
    label.appendChild(document.createTextNode(" Add to comparison"));

    item.appendChild(name);
    item.appendChild(badge);
    item.appendChild(label);
    list.appendChild(item);
  }
  container.appendChild(list);
}

/** The cart box that "appears" once contributions are selected. */
export function renderCart(container: HTMLElement, cart: string[]): void {
  container.replaceChildren();
  container.classList.toggle("hidden", cart.length === 0);
  if (cart.length === 0) {
    return;
  }
  const heading = document.createElement("h3");
  heading.textContent = `Comparison cart (${cart.length})`;
  container.appendChild(heading);
  const list = document.createElement("ul");
  for (const contribution of cart) {
    const item = document.createElement("li");
    item.textContent = contribution;
    list.appendChild(item);
  }
  container.appendChild(list);
}
