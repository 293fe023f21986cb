/** Lazy taxonomy tree view model: children load once, on first expand. */

import type { ApiClient } from './api.js'
import type { ConceptDoc } from './types.js'

export interface TreeNode {
  id: number
  doc: ConceptDoc
  children: number[] | null  // null until expanded
  expanded: boolean
}

export class TreeModel {
  readonly nodes = new Map<number, TreeNode>()
  rootIds: number[] = []

  constructor(private readonly api: ApiClient) {}

  async loadRoots(): Promise<TreeNode[]> {
    this.rootIds = await this.api.roots()
    return Promise.all(this.rootIds.map((id) => this.require(id)))
  }

  private async require(id: number): Promise<TreeNode> {
    const cached = this.nodes.get(id)
    if (cached) return cached
    const doc = await this.api.fetchConcept(id)
    const node: TreeNode = { id, doc, children: null, expanded: false }
    this.nodes.set(id, node)
    return node
  }

  /** Expand a node, fetching its children exactly once. */
  async expand(id: number): Promise<TreeNode[]> {
    const node = await this.require(id)
    if (node.children === null) {
      node.children = await this.api.fetchChildren(id)
    }
    node.expanded = true
    return Promise.all(node.children.map((child) => this.require(child)))
  }

  collapse(id: number): void {
    const node = this.nodes.get(id)
    if (node) node.expanded = false
  }

  isLeaf(id: number): boolean | null {
    const node = this.nodes.get(id)
    if (!node || node.children === null) return null
    return node.children.length === 0
  }
}
