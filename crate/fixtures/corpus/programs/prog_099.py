# fixture program 099
import collections
import datetime
import decimal
import io
import math
import os
import pathlib
import re

import numpy as np
import pandas as pd


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
website = 'https://planet.io/window/397'
host = website.split('/')[2]
print('GET', website)
percentage = 0.075
if percentage < 0.9:
    print('low')
print('ratio %.3f' % percentage)
vector = np.round(np.linspace(0, 1, 7), 3)
print(vector.shape)
vector = np.round(np.linspace(0, 1, 10), 3)
prob = 0.374
print('p=%.2f' % prob)
if prob > 0.5:
    print('likely')
prob = 0.14
buffer_size = 2048
print('size', buffer_size)
dropout_rate = 0.001
print('lr', dropout_rate)
input_shape = (256, 32)
print('size', input_shape)
now = datetime.datetime(2003, 2, 4, 13, 41)
iso = now.isoformat()
num_samples = 6
num_samples += 1
numbers = [36, 35, 33]
print(len(numbers))
total = sum(numbers)
numbers = [1999, 2000, 2006, 1993, 2015, 2013]
email_address = 'alice.quartz@needle.com'
print('mail to', email_address)
domain = email_address.split('@')[1]
labels = ['warsaw']
labels.append('extra')
df = pd.DataFrame({'name': [93, 21]})
tmp = 'Zebra tunnel?'
for loop_round in range(3):
    offset = 82
    print(offset)
raise RuntimeError('simulated failure')
