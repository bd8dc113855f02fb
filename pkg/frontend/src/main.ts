import { ApiClient } from "./api.js";
import { SessionState } from "./state.js";
import { toCsv, toGrid } from "./table.js";
import { renderCart, renderSuggestions } from "./suggestions.js";
import {
  renderPublishForm,
  renderStatementPopup,
  renderTable,
  showPermalink,
} from "./view.js";
import type { SimilarityHit } from "./types.js";

const SECTIONS = ["suggestions", "cart", "controls", "table", "popup", "publish"] as const;

/**
 * The single-page application. All comparison logic lives on the server;
 * this class only keeps the cart, fetches payloads and re-renders.
 */
export class App {
  readonly state = new SessionState();
  mainContribution: string | null = null;
  lastPermalink: string | null = null;
  private hits: SimilarityHit[] = [];
  private sections = new Map<string, HTMLElement>();

  constructor(
    private root: HTMLElement,
    private api: ApiClient,
  ) {
    root.replaceChildren();
    for (const name of SECTIONS) {
      const section = document.createElement("section");
      section.id = name;
      root.appendChild(section);
      this.sections.set(name, section);
    }
    this.buildControls();
    renderPublishForm(this.section("publish"), {
      onPublish: (title, description) => this.publish(title, description),
    });
  }

  section(name: (typeof SECTIONS)[number]): HTMLElement {
    return this.sections.get(name) as HTMLElement;
  }

  private buildControls(): void {
    const controls = this.section("controls");
    const transposeButton = document.createElement("button");
    transposeButton.className = "transpose";
    transposeButton.textContent = "Transpose";
    transposeButton.addEventListener("click", () => {
      this.state.toggleTranspose();
      this.renderComparison();
    });
    controls.appendChild(transposeButton);
  }

  /** Route entry point: `/compare?contributions=...` or `/c/<id>`. */
  async route(pathname: string, search: string): Promise<void> {
    const permalink = pathname.match(/^\/c\/([0-9A-Za-z]{6})$/);
    if (permalink) {
      await this.openPermalink(permalink[1]);
      return;
    }
    if (pathname === "/compare") {
      const ids = (new URLSearchParams(search).get("contributions") ?? "")
        .split(",")
        .filter((c) => c !== "");
      this.state.cart = ids;
      await this.refresh();
    }
  }

  /** Opens the suggestion panel for a main contribution; the main
   * contribution itself starts in the cart. */
  async openContribution(contribution: string): Promise<void> {
    this.mainContribution = contribution;
    if (!this.state.inCart(contribution)) {
      this.state.toggleCart(contribution);
    }
    this.hits = await this.api.similar(contribution);
    this.renderSuggestionPanel();
    renderCart(this.section("cart"), this.state.cart);
  }

  private renderSuggestionPanel(): void {
    renderSuggestions(this.section("suggestions"), this.hits, {
      inCart: (c) => this.state.inCart(c),
      onToggle: (c) => {
        void this.toggleCart(c);
      },
    });
  }

  async toggleCart(contribution: string): Promise<void> {
    this.state.toggleCart(contribution);
    renderCart(this.section("cart"), this.state.cart);
    await this.refresh();
  }

  /** Fetches /compare when the cart has two or more entries; stale
   * responses are dropped by sequence number. */
  async refresh(): Promise<void> {
    if (!this.state.readyToCompare) {
      this.state.applyPayload(this.state.nextSequence(), null);
      this.renderComparison();
      return;
    }
    const sequence = this.state.nextSequence();
    const payload = await this.api.compare(this.state.cart);
    if (this.state.applyPayload(sequence, payload)) {
      this.renderComparison();
    }
  }

  renderComparison(): void {
    const container = this.section("table");
    if (!this.state.payload) {
      container.replaceChildren();
      return;
    }
    renderTable(container, this.state.payload, this.state.customization, {
      onHide: (groupId) => {
        this.state.hide(groupId);
        this.renderComparison();
      },
      onResource: (resourceId) => {
        void this.openResourcePopup(resourceId);
      },
    });
  }

  async openResourcePopup(resourceId: string): Promise<void> {
    const data = await this.api.resourceStatements(resourceId);
    renderStatementPopup(this.section("popup"), data);
  }

  /** CSV of the table exactly as customized on screen. */
  csv(): string {
    if (!this.state.payload) {
      return "";
    }
    return toCsv(toGrid(this.state.payload, this.state.customization));
  }

  async publish(title: string, description: string): Promise<void> {
    const custom = this.state.customization;
    const response = await this.api.publish({
      title,
      description: description || undefined,
      contributions: this.state.cart,
      config: {
        transposed: custom.transposed,
        hiddenGroups: [...custom.hidden],
        rowOrder: custom.order ?? undefined,
      },
    });
    this.lastPermalink = response.permalink;
    showPermalink(this.section("publish"), response.permalink);
  }

  /** Restores a published comparison, customization included. */
  async openPermalink(id: string): Promise<void> {
    const snapshot = await this.api.getComparison(id);
    const config = snapshot.table.config;
    this.state.cart = snapshot.payload.papers.map((p) => p.contributions[0]);
    this.state.customization = {
      hidden: new Set(config.hiddenGroups),
      order: config.rowOrder.length > 0 ? [...config.rowOrder] : null,
      transposed: config.transposed,
    };
    this.state.applyPayload(this.state.nextSequence(), snapshot.payload);
    renderCart(this.section("cart"), this.state.cart);
    this.renderComparison();
  }
}

export function mount(root: HTMLElement, baseUrl = ""): App {
  const app = new App(root, new ApiClient(baseUrl));
  void app.route(window.location.pathname, window.location.search);
  return app;
}
