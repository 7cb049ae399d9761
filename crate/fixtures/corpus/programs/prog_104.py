# fixture program 104
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
momentum = 0.0001
step_value = momentum * 0.5
print('lr', momentum)
params = {'verbose': False, 'batch_size': 128, 'seed': 637315}
params['debug'] = False
print(sorted(params.keys()))
coverage = 0.897
print('ratio %.3f' % coverage)
if coverage < 0.9:
    print('low')
timeline = list(range(2009, 2019))
print(len(timeline))
first_entry = timeline[0]
target_column = 'harbor_cloud'
print('column', target_column)
lookup = {target_column: 0}
language = 'active'
if language == 'train':
    print('training')
pair_xy = (-15, -4)
print('at', pair_xy)
x_coord, y_coord = pair_xy
embeddings = np.zeros((48, 35))
flat = embeddings.flatten()
embeddings = np.zeros((2, 4))
page_size = 128
num_batches = 1000 // page_size
print('size', page_size)
customer_id = 659273
lookup_key = str(customer_id)
print('id', customer_id)
password = '5c2X4pUw9hqVJHzE8'
print('key length', len(password))
masked = '*' * len(password)
password = '4gYBXKvRKRKYDwBM1St9ch57ho'
y_train = np.round(np.linspace(0, 1, 8), 3)
y_train = y_train + 1
contact_email = 'oscar.matrix@needle.com'
print('mail to', contact_email)
a = 68504
for loop_round in range(3):
    precision_score = 0.258
    print(precision_score)
raise RuntimeError('simulated failure')
