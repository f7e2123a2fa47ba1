# coding: utf-8

# framer/tensor/tests/tensor_tests.py
# Copyright (C) 2026 by the Framer developers

# This module is part of Framer and is released under
# the MIT License: http://www.opensource.org/licenses/mit-license.php

import math
from threading import Thread

import numpy as np
from hypothesis import given, settings, strategies as st

from framer.tests.common import TestCase, rng, naive_conv2d


class ElementwiseTest(TestCase):
    def test_values(self):
        self.assertEqual(tensor(-0.3).relu().item(), 0.0)
        self.assertEqual(list((tensor([1, 2]) + tensor([3, 4])).data), [4, 6])
        self.assertEqual(list(elementwise_op('sub', tensor([5.]),
                                             tensor([3.])).data), [2.])
        self.assertEqual((2 / tensor(4.)).item(), 0.5)
        self.assertEqual((-tensor(2.)).item(), -2.)
        self.assertAlmostEqual(tensor(math.e).log().item(), 1.0, 12)

    def test_exp_gradient(self):
        x = tensor(0., requires_grad=True)
        x.exp().backward()

        self.assertAlmostEqual(x.grad, 1.0, 12)
        numeric = (math.exp(1e-5) - math.exp(-1e-5)) / 2e-5
        self.assertAlmostEqual(float(x.grad), numeric, 9)

    def test_broadcast(self):
        a = tensor(rng().normal(size=(3, 4)), requires_grad=True)
        b = tensor(rng(1).normal(size=(4,)), requires_grad=True)
        (a * b).sum().backward()

        self.assertEqual(a.grad.shape, (3, 4))
        self.assertEqual(b.grad.shape, (4,))
        np.testing.assert_allclose(b.grad, a.data.sum(axis=0))

    def test_errors(self):
        a = tensor(np.ones((2, 3)))
        b = tensor(np.ones((4,)))

        with self.assertRaises(ShapeException) as context:
            a + b
        self.assertEqual(context.exception.shapes, ((2, 3), (4,)))
        self.assertIn('(2, 3)', str(context.exception))
        self.assertIn('(4,)', str(context.exception))

        self.assertRaises(DomainException, lambda: tensor([1., 0.]).log())
        self.assertRaises(DomainException, lambda: tensor(1.) / 0.)
        self.assertRaises(DomainException,
                          lambda: elementwise_op('add', tensor(1.)))

    def test_registered_ops(self):
        generator = rng(3)
        a = tensor(generator.uniform(0.5, 2.0, (2, 3)), requires_grad=True)
        b = tensor(generator.uniform(0.5, 2.0, (2, 3)), requires_grad=True)

        for tag in ('add', 'sub', 'mul', 'div'):
            report = grad_check(
                lambda: elementwise_op(tag, a, b).sum(), {'a': a, 'b': b},
                h=1e-6)
            self.assertTrue(report.passed, '{0}: {1}'.format(tag, report))

        for tag in ('neg', 'relu', 'exp', 'log', 'sqrt'):
            report = grad_check(lambda: (elementwise_op(tag, a) * b).sum(),
                                {'a': a}, h=1e-6)
            self.assertTrue(report.passed, '{0}: {1}'.format(tag, report))

        report = grad_check(lambda: (a ** 3).mean(), [a], h=1e-6)
        self.assertTrue(report.passed, str(report))


class GraphTest(TestCase):
    def test_shared_node(self):
        x = tensor([1., 2., 3.], requires_grad=True)
        y = x * 2
        z = (y * y + y).sum()
        z.backward()

        # dz/dx = (2y + 1) * 2
        np.testing.assert_allclose(x.grad, (2 * y.data + 1) * 2)

    def test_topological(self):
        x = tensor([1., 2.], requires_grad=True)
        y = (x.exp() * x).sum()
        graph = Graph(y)

        for k, node in enumerate(graph):
            self.assertTrue(all(i < k for i in node.inputs))
        self.assertIs(graph.nodes[-1].tensor, y)
        self.assertEqual(len(set(id(n.tensor) for n in graph)), len(graph))

    def test_unreached_leaf(self):
        x = tensor([1., 2.], requires_grad=True)
        unused = tensor([3.], requires_grad=True)
        z = (x * 0 + unused.detach()).sum()
        z.backward()

        self.assertIsNone(unused.grad)
        np.testing.assert_array_equal(x.grad, [0., 0.])

    def test_no_grad(self):
        x = tensor([1., 2.], requires_grad=True)

        with no_grad():
            y = x * 3
            with no_grad():
                pass
            self.assertFalse(grad_enabled())
        self.assertTrue(grad_enabled())
        self.assertFalse(y.requires_grad)
        self.assertRaises(DomainException, y.sum().backward)

    def test_threads(self):
        results = {}

        def run(k):
            x = tensor(np.full(3, float(k)), requires_grad=True)
            (x * x).sum().backward()
            results[k] = x.grad

        threads = [Thread(target=run, args=(k,)) for k in range(8)]
        [t.start() for t in threads]
        [t.join() for t in threads]

        for k in range(8):
            np.testing.assert_array_equal(results[k], np.full(3, 2. * k))

    def test_accumulation(self):
        x = tensor([1.], requires_grad=True)
        (x * 2).sum().backward()
        (x * 3).sum().backward()

        self.assertEqual(x.grad[0], 5.)


class MatmulTest(TestCase):
    def test_identity(self):
        m = tensor(rng().normal(size=(2, 3)))

        np.testing.assert_array_equal(matmul(tensor(np.eye(2)), m).data,
                                      m.data)

    def test_values(self):
        out = tensor([[1., 2.], [3., 4.]]) @ tensor([[5.], [6.]])

        np.testing.assert_array_equal(out.data, [[17.], [39.]])

    def test_gradient(self):
        generator = rng(2)
        a = tensor(generator.normal(size=(3, 4)), requires_grad=True)
        b = tensor(generator.normal(size=(4, 2)), requires_grad=True)
        weights = generator.normal(size=(3, 2))

        report = grad_check(lambda: (matmul(a, b) * weights).sum(),
                            {'a': a, 'b': b}, h=1e-4, tol=1e-6)
        self.assertTrue(report.passed, str(report))

    def test_mismatch(self):
        self.assertRaises(ShapeException, matmul, tensor(np.ones((2, 3))),
                          tensor(np.ones((2, 3))))


class ReductionTest(TestCase):
    def test_shape_ops(self):
        generator = rng(4)
        x = tensor(generator.normal(size=(2, 3, 4)), requires_grad=True)
        weights = generator.normal(size=(4, 3))

        def f():
            y = x.mean(axis=0).transpose(1, 0) * weights
            z = concat([y, x[1, :2].T], axis=1)
            return stack([z.sum(axis=1), z.sum(axis=1) * 2]).reshape(-1).sum()

        report = grad_check(f, [x], h=1e-6)
        self.assertTrue(report.passed, str(report))

    def test_keepdims(self):
        x = tensor(np.ones((2, 3)))

        self.assertEqual(x.sum(axis=1, keepdims=True).shape, (2, 1))
        self.assertEqual(x.mean().item(), 1.0)


class SoftmaxTest(TestCase):
    def test_values(self):
        np.testing.assert_array_equal(softmax(tensor([0., 0.])).data,
                                      [0.5, 0.5])
        np.testing.assert_allclose(softmax(tensor([0., 1.])).data,
                                   [0.2689414213699951, 0.7310585786300049],
                                   atol=1e-12)

    def test_nan(self):
        self.assertRaises(DomainException, softmax, tensor([0., np.nan]))

    def test_large(self):
        out = softmax(tensor([1000., 1000., -1000.])).data

        np.testing.assert_allclose(out, [0.5, 0.5, 0.], atol=1e-12)
        self.assertAlmostEqual(logsumexp(tensor([1000., 1000.])).item(),
                               1000 + math.log(2), 9)

    @settings(max_examples=50, deadline=None)
    @given(st.lists(st.floats(-50, 50), min_size=1, max_size=8),
           st.floats(-100, 100))
    def test_shift_invariance(self, values, shift):
        base = softmax(tensor(values)).data
        moved = softmax(tensor(values) + shift).data

        np.testing.assert_allclose(base, moved, atol=1e-9)
        self.assertAlmostEqual(base.sum(), 1.0, 12)
        self.assertTrue((base >= 0).all())

    def test_gradient(self):
        x = tensor(rng(5).normal(size=(2, 4)), requires_grad=True)
        weights = rng(6).normal(size=(2, 4))

        report = grad_check(lambda: (softmax(x) * weights).sum() +
                            logsumexp(x).sum(), [x], h=1e-6)
        self.assertTrue(report.passed, str(report))


class ConvTest(TestCase):
    def test_identity(self):
        x = tensor(rng().normal(size=(2, 3, 5, 5)))
        k = tensor(np.eye(3).reshape(3, 3, 1, 1))

        np.testing.assert_array_equal(conv2d(x, k).data, x.data)

    def test_constant_reflect(self):
        x = tensor(np.full((1, 1, 6, 7), 0.7))
        k = tensor(np.full((1, 1, 3, 3), 1. / 9))

        np.testing.assert_allclose(conv2d(x, k, pad_mode='reflect').data,
                                   x.data, atol=1e-13)

    def test_oracle(self):
        generator = rng(7)
        x = generator.normal(size=(1, 4, 5, 5))
        k = generator.normal(size=(2, 4, 3, 3))

        out = conv2d(tensor(x), tensor(k)).data
        np.testing.assert_allclose(out, naive_conv2d(x, k, pad=1),
                                   atol=1e-12)

    def test_stride(self):
        generator = rng(8)
        x = generator.normal(size=(1, 2, 8, 8))
        k = generator.normal(size=(3, 2, 3, 3))

        out = conv2d(tensor(x), tensor(k), stride=2).data
        self.assertEqual(out.shape, (1, 3, 4, 4))
        np.testing.assert_allclose(out, naive_conv2d(x, k, pad=1)[..., ::2, ::2],
                                   atol=1e-12)

    def test_gradient(self):
        generator = rng(9)
        x = tensor(generator.normal(size=(2, 2, 5, 4)), requires_grad=True)
        k = tensor(generator.normal(size=(3, 2, 3, 3)), requires_grad=True)
        bias = tensor(generator.normal(size=(3,)), requires_grad=True)
        weights = generator.normal(size=(2, 3, 3, 2))

        def f():
            return (conv2d(x, k, bias, stride=2, pad_mode='reflect') *
                    weights).sum()

        report = grad_check(f, {'x': x, 'k': k, 'bias': bias}, h=1e-6)
        self.assertTrue(report.passed, str(report))

    def test_channel_mismatch(self):
        with self.assertRaises(ShapeException) as context:
            conv2d(tensor(np.ones((1, 3, 4, 4))),
                   tensor(np.ones((2, 4, 3, 3))))
        self.assertIn('channel', str(context.exception))

        self.assertRaises(ShapeException, conv2d,
                          tensor(np.ones((1, 3, 4, 4))),
                          tensor(np.ones((2, 3, 2, 2))))

    def test_pad_gradient(self):
        x = tensor(rng(10).normal(size=(1, 2, 4, 5)), requires_grad=True)
        weights = rng(11).normal(size=(1, 2, 7, 9))

        report = grad_check(lambda: (pad2d(x, (1, 2, 2, 2), 'reflect') *
                                     weights).sum(), [x], h=1e-6)
        self.assertTrue(report.passed, str(report))


class ResizeTest(TestCase):
    def test_constant(self):
        x = tensor(np.full((1, 2, 8, 8), 0.3))

        out = resize_bilinear(x, (16, 12))
        self.assertEqual(out.shape, (1, 2, 16, 12))
        np.testing.assert_allclose(out.data, 0.3, atol=1e-15)

    def test_gradient(self):
        x = tensor(rng(12).normal(size=(1, 1, 4, 6)), requires_grad=True)
        weights = rng(13).normal(size=(1, 1, 8, 3))

        report = grad_check(lambda: (resize_bilinear(x, (8, 3)) *
                                     weights).sum(), [x], h=1e-6)
        self.assertTrue(report.passed, str(report))


class SpectralProjectTest(TestCase):
    def test_gradient(self):
        mask = np.zeros((6, 6))
        mask[0, 0] = mask[0, 1] = mask[0, 5] = mask[1, 0] = mask[5, 0] = 1
        x = tensor(rng(14).normal(size=(2, 6, 6)), requires_grad=True)
        weights = rng(15).normal(size=(2, 6, 6))

        report = grad_check(lambda: (spectral_project(x, mask) *
                                     weights).sum(), [x], h=1e-6)
        self.assertTrue(report.passed, str(report))

    def test_partition(self):
        mask = np.zeros((4, 4))
        mask[0, 0] = 1
        x = tensor(rng(16).normal(size=(4, 4)))

        total = spectral_project(x, mask) + spectral_project(x, 1 - mask)
        np.testing.assert_allclose(total.data, x.data, atol=1e-12)
        np.testing.assert_allclose(spectral_project(x, mask).data,
                                   x.data.mean(), atol=1e-12)


class GradCheckTest(TestCase):
    def test_sum_of_squares(self):
        x = tensor(rng(17).normal(size=5), requires_grad=True)

        report = grad_check(lambda: (x * x).sum(), {'x': x})
        self.assertTrue(report.passed)
        self.assertLessEqual(report.errors['x'], 1e-6)

        (x * x).sum().backward()
        x.grad = None
        (x * x).sum().backward()
        np.testing.assert_array_equal(x.grad, 2 * x.data)

    def test_failure_reported(self):
        x = tensor([1., 2.], requires_grad=True)

        def wrong():
            # gradient is cut, numeric derivative is not
            return (x.detach() * x.detach()).sum() + x.sum() * 0

        report = grad_check(wrong, {'x': x})
        self.assertFalse(report.passed)
        self.assertIn('FAILED', str(report))

    def test_non_finite(self):
        x = tensor([1.], requires_grad=True)

        self.assertRaises(DomainException, grad_check,
                          lambda: (x * np.inf).sum(), [x])


from framer.util import ShapeException, DomainException
from framer.tensor import (tensor, Graph, no_grad, grad_enabled,
                           elementwise_op, matmul, concat, stack, softmax,
                           logsumexp, conv2d, pad2d, resize_bilinear,
                           spectral_project, grad_check)
