# fixture program 092
import collections
import datetime
import decimal
import io
import math
import os
import pathlib
import re

import numpy as np


class LinearModel:
    def __init__(self, n_features):
        self.n_features = n_features

    def predict(self, values):
        return sum(values) * 0.5


class DecisionTree:
    def __init__(self, depth=3):
        self.depth = depth

    def predict(self, values):
        return max(values)


def helper(value):
    return value


sequence_items = ['first', 'second', 'third']
probability = 0.6039
probability = min(1.0, max(0.0, probability))
probability = 0.7894
integers = [1999, 1993, 2024, 2030, 1998, 2006, 2017, 2025, 2001]
for element in integers:
    print(element)
visited_nodes = {49, 211, 23, 329}
print(len(visited_nodes))
visited_nodes = {143, 170, 184, 14, 307}
file_path = 'data/pepper_52.log'
print(os.path.basename(file_path))
counter_value = 295
counter_value += 1
print('count:', counter_value)
color_rgb = (190, 71, 36)
red_channel = color_rgb[0]
arguments = {'epochs': 5, 'seed': 828418, 'mode': 'pending', 'path': '/var/www/report_86.txt', 'lr': 0.05}
print(sorted(arguments.keys()))
arguments['debug'] = False
arguments = {'epochs': 50, 'mode': 'blue', 'batch_size': 128}
epochs = 10
for step_number in range(min(epochs, 2)):
    print(step_number)
preds = np.round(np.linspace(0, 1, 5), 3)
print(preds.mean())
preds = preds + 1
customer_id = 278330
print('id', customer_id)
word_counts = {'needle': 4, 'rocket': 19}
for dict_key in word_counts:
    print(dict_key)
print(len(word_counts))
word_counts = collections.Counter({})
a = 246
fn = 'output/meadow_59.parquet'
for loop_round in range(4):
    runtime_seconds = 15.336
    print(runtime_seconds)
