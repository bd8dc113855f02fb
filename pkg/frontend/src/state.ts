import type { ComparePayload } from "./types.js";

export interface Customization {
  hidden: Set<string>;
  order: string[] | null;
  transposed: boolean;
}

export function emptyCustomization(): Customization {
  return { hidden: new Set(), order: null, transposed: false };
}

/**
 * Client-side session state: the comparison cart, the latest payload and
 * the customization that is applied on top of it. Customization never
 * touches the payload itself, so any action sequence is reversible until
 * publish.
 *
 * Responses are tagged with a sequence number; a response older than the
 * latest issued request is discarded, so slow fetches never clobber the
 * state produced by a later cart change.
 */
export class SessionState {
  cart: string[] = [];
  payload: ComparePayload | null = null;
  customization: Customization = emptyCustomization();
  private sequence = 0;
  private applied = 0;

  nextSequence(): number {
    this.sequence += 1;
    return this.sequence;
  }

  inCart(contribution: string): boolean {
    return this.cart.includes(contribution);
  }

  toggleCart(contribution: string): void {
    if (this.inCart(contribution)) {
      this.cart = this.cart.filter((c) => c !== contribution);
    } else {
      this.cart = [...this.cart, contribution];
    }
  }

  get readyToCompare(): boolean {
    return this.cart.length >= 2;
  }

  /** Returns false when the response is stale and was dropped. */
  applyPayload(sequence: number, payload: ComparePayload | null): boolean {
    if (sequence <= this.applied) {
      return false;
    }
    this.applied = sequence;
    this.payload = payload;
    return true;
  }

  hide(groupId: string): void {
    this.customization.hidden.add(groupId);
  }

  show(groupId: string): void {
    this.customization.hidden.delete(groupId);
  }

  toggleTranspose(): void {
    this.customization.transposed = !this.customization.transposed;
  }

  reorder(order: string[]): void {
    this.customization.order = [...order];
  }

  resetCustomization(): void {
    this.customization = emptyCustomization();
  }
}
